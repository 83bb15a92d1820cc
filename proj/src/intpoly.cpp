#include "smallgen/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace smallgen {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    return *this + (-o);
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Integer& k) const {
    std::vector<Integer> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Integer> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Integer(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Real IntPoly::eval(const Real& x) const {
    Real acc(0L, x.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real(*it, x.prec());
    return acc;
}

Complex IntPoly::eval(const Complex& z) const {
    mpfr_prec_t prec = z.re.prec();
    Complex acc(prec);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z;
        acc.re = acc.re + Real(*it, prec);
    }
    return acc;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& a : c_) g = gcd(g, a);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(lc()) < 0) g = -g;
    std::vector<Integer> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return IntPoly{};
    if (degree() < o.degree()) return std::nullopt;
    std::vector<Integer> rem = c_;
    std::vector<Integer> q(static_cast<size_t>(degree() - o.degree()) + 1);
    for (int i = degree() - o.degree(); i >= 0; --i) {
        Integer top = rem[static_cast<size_t>(i + o.degree())];
        if (top % o.lc() != 0) return std::nullopt;
        Integer qi = top / o.lc();
        q[static_cast<size_t>(i)] = qi;
        for (int j = 0; j <= o.degree(); ++j)
            rem[static_cast<size_t>(i + j)] -= qi * o[j];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        Integer m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i >= 1) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Pseudo-remainder R with lc(g)^(deg f - deg g + 1) * f = Q*g + R.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    int dg = g.degree();
    Integer glc = g.lc();
    int steps = f.degree() - dg + 1;
    int done = 0;
    while (r.degree() >= dg && !r.is_zero()) {
        std::vector<Integer> shifted(static_cast<size_t>(r.degree() - dg), 0);
        shifted.push_back(r.lc());
        r = r.scaled(glc) - IntPoly(std::move(shifted)) * g;
        ++done;
    }
    if (done < steps) r = r.scaled(ipow(glc, static_cast<unsigned long>(steps - done)));
    return r;
}

IntPoly exact_div_scalar(const IntPoly& f, const Integer& k) {
    std::vector<Integer> r(f.coeffs());
    for (auto& x : r) {
        if (x % k != 0) throw std::logic_error("subresultant exact division failed");
        x /= k;
    }
    return IntPoly(std::move(r));
}

}  // namespace

Integer poly_resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    if (f.degree() == 0) return ipow(f.lc(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return ipow(g.lc(), static_cast<unsigned long>(f.degree()));
    // Subresultant PRS, following Cohen, "A Course in Computational Algebraic
    // Number Theory", Algorithm 3.3.7.
    IntPoly A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((static_cast<long>(A.degree()) * B.degree()) % 2 != 0) sign = -sign;
        std::swap(A, B);
    }
    Integer a_cont = A.content(), b_cont = B.content();
    A = exact_div_scalar(A, a_cont);
    B = exact_div_scalar(B, b_cont);
    Integer t = ipow(a_cont, static_cast<unsigned long>(B.degree())) *
                ipow(b_cont, static_cast<unsigned long>(A.degree()));
    Integer gg = 1, h = 1;
    while (true) {
        int da = A.degree(), db = B.degree();
        if ((da % 2 != 0) && (db % 2 != 0)) sign = -sign;
        int delta = da - db;
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return 0;
        A = B;
        B = exact_div_scalar(R, gg * ipow(h, static_cast<unsigned long>(delta)));
        gg = A.lc();
        if (delta > 0) {
            Integer num = ipow(gg, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            if (num % den != 0) throw std::logic_error("subresultant h update failed");
            h = num / den;
        }
        if (B.degree() == 0) break;
    }
    // here deg A >= 1 and B is a nonzero constant
    Integer num = ipow(B.lc(), static_cast<unsigned long>(A.degree()));
    Integer den = ipow(h, static_cast<unsigned long>(A.degree() - 1));
    if (num % den != 0) throw std::logic_error("subresultant final division failed");
    Integer res = t * (num / den);
    return sign < 0 ? -res : res;
}

Integer poly_discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant of constant polynomial");
    if (d == 1) return 1;
    Integer r = poly_resultant(f, f.derivative());
    if (r % f.lc() != 0) throw std::logic_error("resultant not divisible by lc");
    Integer out = r / f.lc();
    if (((static_cast<long>(d) * (d - 1)) / 2) % 2 != 0) out = -out;
    return out;
}

namespace {

using QPoly = std::vector<Rational>;

QPoly to_q(const IntPoly& f) {
    QPoly r;
    for (const auto& a : f.coeffs()) r.emplace_back(a);
    return r;
}

void q_normalize(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly q_rem(QPoly a, const QPoly& b) {
    q_normalize(a);
    while (!a.empty() && a.size() >= b.size()) {
        Rational q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        q_normalize(a);
    }
    return a;
}

IntPoly from_q_primitive(const QPoly& f) {
    Integer l = 1;
    for (const auto& c : f) l = lcm(l, c.get_den());
    std::vector<Integer> r;
    for (const auto& c : f) {
        Rational s = c * Rational(l);
        r.push_back(s.get_num());
    }
    return IntPoly(std::move(r)).primitive_part();
}

Rational q_eval(const QPoly& f, const Rational& x) {
    Rational acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Sturm chain of f (squarefree not required for the gcd use, required for
// root counting semantics).
std::vector<QPoly> sturm_chain(const IntPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(to_q(f));
    chain.push_back(to_q(f.derivative()));
    q_normalize(chain.back());
    while (!chain.back().empty() && chain.back().size() > 1) {
        QPoly r = q_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        q_normalize(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    if (!chain.back().empty() && chain.back().size() == 1 && chain.size() >= 2) {
        // constant tail already in place
    }
    return chain;
}

int sign_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& g : chain) {
        if (g.empty()) continue;
        int s = sgn(q_eval(g, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

Rational cauchy_bound(const IntPoly& f) {
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rational v = abs(Rational(f[i]) / Rational(f.lc()));
        if (v > m) m = v;
    }
    return m + 1;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    QPoly a = to_q(f), b = to_q(g);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        QPoly r = q_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return from_q_primitive(a);
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() < 1) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

int real_root_count(const IntPoly& f) {
    if (!is_squarefree(f)) throw std::invalid_argument("real_root_count requires squarefree input");
    if (f.degree() < 1) return 0;
    Rational b = cauchy_bound(f);
    auto chain = sturm_chain(f);
    return sign_variations_at(chain, -b) - sign_variations_at(chain, b);
}

int real_root_count_in(const IntPoly& f, const Rational& a, const Rational& b) {
    if (!is_squarefree(f)) throw std::invalid_argument("real_root_count_in requires squarefree input");
    auto chain = sturm_chain(f);
    int n = sign_variations_at(chain, a) - sign_variations_at(chain, b);
    // Sturm counts roots in (a, b]; drop b if it is a root.
    if (f.eval(b) == 0) --n;
    return n;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& f,
                                                              const Rational& max_width) {
    if (!is_squarefree(f)) throw std::invalid_argument("isolate_real_roots requires squarefree input");
    std::vector<std::pair<Rational, Rational>> out;
    if (f.degree() < 1) return out;
    auto chain = sturm_chain(f);
    auto count = [&](const Rational& a, const Rational& b) {
        int n = sign_variations_at(chain, a) - sign_variations_at(chain, b);
        return n;  // roots in (a, b]
    };
    Rational bound = cauchy_bound(f);
    // Depth-first bisection, left to right, so results come out ascending.
    struct Seg { Rational a, b; int n; };
    std::vector<Seg> stack;
    int total = count(-bound, bound);
    stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (f.eval(s.b) == 0) {
            // exact rational root at the right endpoint
            if (s.n == 1) {
                out.emplace_back(s.b, s.b);
                continue;
            }
        }
        if (s.n == 1 && f.eval(s.b) != 0 && (s.b - s.a) <= max_width) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rational m = (s.a + s.b) / 2;
        int nl = count(s.a, m);
        int nr = s.n - nl;
        // push right first so the left segment is processed first
        if (nr > 0) stack.push_back({m, s.b, nr});
        if (nl > 0) stack.push_back({s.a, m, nl});
    }
    return out;
}

}  // namespace smallgen
