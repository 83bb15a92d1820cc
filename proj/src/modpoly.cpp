#include "smallgen/modpoly.hpp"

#include <algorithm>
#include <functional>

namespace smallgen {

namespace {

Integer mod_inv(const Integer& a, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("non-invertible element mod p");
    return r;
}

Integer mod_reduce(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

ModPoly::ModPoly(Integer p, std::vector<Integer> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (auto& a : c_) a = mod_reduce(a, p_);
    normalize();
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Integer& p) {
    return ModPoly(p, f.coeffs());
}

bool ModPoly::operator<(const ModPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[static_cast<size_t>(i)];
        const Integer& b = o.c_[static_cast<size_t>(i)];
        if (a != b) return a < b;
    }
    return false;
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_, {});
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    Integer inv = mod_inv(c_.back(), p_);
    std::vector<Integer> r(c_);
    for (auto& a : r) a *= inv;
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::rem(const ModPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("mod-p division by zero polynomial");
    std::vector<Integer> r(c_);
    Integer inv = mod_inv(o.c_.back(), p_);
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= o.degree()) {
        Integer q = mod_reduce(r[static_cast<size_t>(dr)] * inv, p_);
        if (q != 0)
            for (int j = 0; j <= o.degree(); ++j)
                r[static_cast<size_t>(dr - o.degree() + j)] -= q * o.c_[static_cast<size_t>(j)];
        --dr;
    }
    r.resize(static_cast<size_t>(std::max(o.degree(), 0)));
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::derivative() const {
    if (degree() < 1) return ModPoly(p_, {});
    std::vector<Integer> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Integer(static_cast<long>(i));
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::powmod(const Integer& e, const ModPoly& m) const {
    ModPoly base = rem(m);
    ModPoly acc(p_, {1});
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = (acc * acc).rem(m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            acc = (acc * base).rem(m);
    }
    return acc;
}

Integer ModPoly::linear_root() const {
    if (degree() != 1 || !is_monic())
        throw std::invalid_argument("linear_root requires a monic linear polynomial");
    return mod_reduce(-c_[0], p_);
}

ModPoly modpoly_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

ModPoly exact_quot(const ModPoly& a, const ModPoly& b) {
    // a = q*b exactly; compute q by synthetic division.
    if (a.is_zero()) return ModPoly(a.modulus(), {});
    const Integer& p = a.modulus();
    std::vector<Integer> r(a.coeffs());
    Integer inv = mod_inv(b.coeffs().back(), p);
    int dq = a.degree() - b.degree();
    std::vector<Integer> q(static_cast<size_t>(dq) + 1);
    for (int i = dq; i >= 0; --i) {
        Integer qi = (r[static_cast<size_t>(i + b.degree())] % p) * inv;
        qi = qi % p;
        if (qi < 0) qi += p;
        q[static_cast<size_t>(i)] = qi;
        for (int j = 0; j <= b.degree(); ++j)
            r[static_cast<size_t>(i + j)] -= qi * b[j];
    }
    return ModPoly(p, std::move(q));
}

// p-th root of g(x) = u(x^p) over F_p.
ModPoly pth_root(const ModPoly& g) {
    unsigned long p = g.modulus().get_ui();
    std::vector<Integer> r;
    for (size_t i = 0; i < g.coeffs().size(); i += p) r.push_back(g.coeffs()[i]);
    return ModPoly(g.modulus(), std::move(r));
}

// Squarefree decomposition of a monic polynomial over F_p.
void squarefree_decompose(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), mult * static_cast<int>(f.modulus().get_ui()), out);
        return;
    }
    ModPoly c = modpoly_gcd(f, d);
    ModPoly w = exact_quot(f, c);
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = modpoly_gcd(w, c);
        ModPoly z = exact_quot(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        ++i;
        w = std::move(y);
        c = exact_quot(c, w);
    }
    if (c.degree() > 0)
        squarefree_decompose(pth_root(c), mult * static_cast<int>(f.modulus().get_ui()), out);
}

struct CZRandom {
    gmp_randstate_t state;
    explicit CZRandom(unsigned long seed) {
        gmp_randinit_mt(state);
        gmp_randseed_ui(state, seed);
    }
    ~CZRandom() { gmp_randclear(state); }
    ModPoly random_poly(const Integer& p, int max_deg) {
        std::vector<Integer> c(static_cast<size_t>(max_deg) + 1);
        for (auto& a : c) mpz_urandomm(a.get_mpz_t(), state, p.get_mpz_t());
        return ModPoly(p, std::move(c));
    }
};

void equal_degree_split(const ModPoly& h, int dd, CZRandom& rng, std::vector<ModPoly>& out) {
    if (h.degree() == dd) {
        out.push_back(h.monic());
        return;
    }
    const Integer& p = h.modulus();
    while (true) {
        ModPoly t = rng.random_poly(p, 2 * dd - 1);
        if (t.degree() < 1) continue;
        ModPoly s(p, {});
        if (p == 2) {
            // trace map over F_2
            ModPoly acc = t.rem(h);
            s = acc;
            for (int i = 1; i < dd; ++i) {
                acc = (acc * acc).rem(h);
                s = s + acc;
            }
        } else {
            Integer e;
            mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(dd));
            e = (e - 1) / 2;
            s = t.powmod(e, h) - ModPoly(p, {1});
        }
        ModPoly d = modpoly_gcd(s, h);
        if (d.degree() > 0 && d.degree() < h.degree()) {
            equal_degree_split(d, dd, rng, out);
            equal_degree_split(exact_quot(h, d).monic(), dd, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& f, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("factor_mod_p requires prime modulus");
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.is_zero()) throw std::invalid_argument("polynomial vanishes mod p");

    // fixed per-call seed for reproducibility
    unsigned long seed = 0x9e3779b97f4a7c15UL ^ p.get_ui();
    for (const auto& c : fp.coeffs()) seed = seed * 1099511628211UL + c.get_ui();
    CZRandom rng(seed);

    std::vector<ModFactor> result;
    if (fp.degree() == 0) return result;

    std::vector<std::pair<ModPoly, int>> squarefree_parts;
    squarefree_decompose(fp.monic(), 1, squarefree_parts);

    for (auto& [part, mult] : squarefree_parts) {
        // distinct-degree splitting
        ModPoly g = part;
        ModPoly h = ModPoly::x(p).rem(g);
        int i = 1;
        std::vector<std::pair<ModPoly, int>> by_degree;  // (product, factor degree)
        while (g.degree() >= 2 * i) {
            h = h.powmod(p, g);
            ModPoly d = modpoly_gcd(h - ModPoly::x(p), g);
            if (d.degree() > 0) {
                by_degree.emplace_back(d, i);
                g = exact_quot(g, d).monic();
                h = h.rem(g);
            }
            ++i;
        }
        if (g.degree() > 0) by_degree.emplace_back(g, g.degree());
        for (auto& [prod, dd] : by_degree) {
            std::vector<ModPoly> irr;
            equal_degree_split(prod, dd, rng, irr);
            for (auto& q : irr) result.push_back({q, mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const ModFactor& a, const ModFactor& b) {
        if (!(a.factor == b.factor)) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

}  // namespace smallgen
