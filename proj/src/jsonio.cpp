#include "smallgen/jsonio.hpp"

#include <cmath>
#include <cstdio>

namespace smallgen {

namespace {

std::string int_str(const Integer& n) { return n.get_str(); }

Integer parse_int(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

std::string dbl_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json intvec_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_str(x));
    return a;
}

std::vector<Integer> parse_intvec(const Json& j) {
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(parse_int(x));
    return out;
}

}  // namespace

std::string rational_str(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

Json real_json(const Real& x) {
    double mid = x.mid();
    double err = x.rad() + std::fabs(mid) * 1e-16 + 1e-300;
    return Json{{"value", dbl_str(mid)}, {"error", dbl_str(err)}};
}

Real parse_real(const Json& j) {
    double v = std::stod(j.at("value").get<std::string>());
    double e = std::stod(j.at("error").get<std::string>());
    return Real::from_endpoints(v, v, 256).widened(e + std::fabs(v) * 1e-13);
}

FieldPtr parse_field_spec(const Json& spec, bool override_irreducibility) {
    if (!spec.is_object() || !spec.contains("poly"))
        throw std::invalid_argument("field spec must be an object with a \"poly\" array");
    std::vector<Integer> coeffs = parse_intvec(spec.at("poly"));
    std::optional<Integer> disc;
    if (spec.contains("disc")) disc = parse_int(spec.at("disc"));
    std::optional<QMat> basis;
    if (spec.contains("basis")) {
        QMat b;
        for (const auto& row : spec.at("basis")) {
            QVec r;
            for (const auto& x : row) r.push_back(parse_rational(x.get<std::string>()));
            b.push_back(std::move(r));
        }
        basis = std::move(b);
    }
    return NumberField::make(coeffs, disc, basis, override_irreducibility);
}

Json field_info_json(const FieldPtr& k) {
    return Json{
        {"degree", k->degree()},
        {"signature", Json::array({k->real_places(), k->complex_places()})},
        {"poly", intvec_json(k->defining_poly().coeffs())},
        {"poly_disc", int_str(k->poly_disc())},
        {"order_disc", int_str(k->order_disc())},
        {"field_disc", int_str(k->field_disc())},
        {"field_disc_exact", k->disc_is_field_exact()},
        {"field_constant", real_json(k->field_constant(256))},
        {"field_constant_pow_d", real_json(k->field_constant_pow_d(256))},
    };
}

Json certificate_json(const GeneratorCertificate& cert) {
    Json j{
        {"field", Json{{"poly", intvec_json(cert.alpha.field()->defining_poly().coeffs())}}},
        {"mode", cert.tag == TheoremTag::real_place ? "real" : "padic"},
        {"min_poly", intvec_json(cert.minimal_poly.coeffs())},
        {"bound", real_json(cert.bound)},
    };
    Json coords = Json::array();
    for (const auto& c : cert.alpha.coords()) coords.push_back(rational_str(c));
    j["alpha"] = std::move(coords);
    Json h{{"value", real_json(cert.height.value)["value"]},
           {"error", real_json(cert.height.value)["error"]}};
    if (cert.height.exact_square) h["exact_square"] = int_str(*cert.height.exact_square);
    j["height"] = std::move(h);
    if (cert.tag == TheoremTag::real_place) {
        j["real_place"] = cert.real_place;
    } else {
        j["primes"] = intvec_json(cert.primes);
        j["roots"] = intvec_json(cert.roots);
        j["equality_places"] = cert.equality_places;
    }
    Json checks = Json::array();
    for (const auto& pc : cert.place_record)
        checks.push_back(Json{{"what", pc.what}, {"pass", pc.pass}});
    j["checks"] = std::move(checks);
    return j;
}

GeneratorCertificate parse_certificate(const Json& j, bool override_irreducibility) {
    FieldPtr k = parse_field_spec(j.at("field"), override_irreducibility);
    QVec coords;
    for (const auto& c : j.at("alpha")) coords.push_back(parse_rational(c.get<std::string>()));
    FieldElement alpha = k->element(std::move(coords));
    IntPoly mp(parse_intvec(j.at("min_poly")));
    HeightValue h{parse_real(j.at("height")), std::nullopt};
    if (j.at("height").contains("exact_square"))
        h.exact_square = parse_int(j.at("height").at("exact_square"));
    TheoremTag tag =
        j.at("mode").get<std::string>() == "real" ? TheoremTag::real_place : TheoremTag::padic;
    GeneratorCertificate cert{std::move(alpha), std::move(mp), std::move(h),
                              parse_real(j.at("bound")), tag, -1, {}, {}, 0, {}};
    if (tag == TheoremTag::real_place) {
        cert.real_place = j.at("real_place").get<int>();
    } else {
        cert.primes = parse_intvec(j.at("primes"));
        cert.roots = parse_intvec(j.at("roots"));
        cert.equality_places = j.at("equality_places").get<long>();
    }
    if (j.contains("checks"))
        for (const auto& pc : j.at("checks"))
            cert.place_record.push_back(
                {pc.at("what").get<std::string>(), pc.at("pass").get<bool>()});
    return cert;
}

Json prime_set_json(const PrimeSet& ps) {
    return Json{
        {"primes", intvec_json(ps.primes)},
        {"roots", intvec_json(ps.roots)},
        {"product", int_str(ps.product)},
        {"threshold", real_json(ps.threshold)},
    };
}

Json splitting_json(const SplittingType& st) {
    Json places = Json::array();
    for (const auto& pr : st.pairs) {
        Json p{{"e", int_str(pr.e)}, {"f", int_str(pr.f)}};
        if (pr.root) p["root"] = int_str(*pr.root);
        places.push_back(std::move(p));
    }
    const char* method = st.method == SplitMethod::generic          ? "generic"
                         : st.method == SplitMethod::exact_quadratic ? "exact_quadratic"
                                                                     : "unsupported";
    return Json{{"p", int_str(st.p)}, {"method", method}, {"places", std::move(places)}};
}

Json cheb_json(const ChebReport& rep) {
    return Json{
        {"c1", rational_str(rep.c1)},
        {"threshold", rational_str(rep.cheb_threshold)},
        {"hypothesis_met", rep.hypothesis_met},
        {"window", Json::array({real_json(rep.window_lo), real_json(rep.window_hi)})},
        {"window_count", rep.window_count},
        {"tail_bound", dbl_str(rep.tail_bound)},
    };
}

Json census_json(const FrobeniusCensus& c) {
    Json counts = Json::array();
    for (const auto& [pat, n] : c.counts)
        counts.push_back(Json{{"pattern", pat}, {"count", n}});
    return Json{{"counts", std::move(counts)},
                {"primes_used", c.primes_used},
                {"li", dbl_str(c.li)}};
}

Json sharpness_json(const SharpnessReport& rep) {
    return Json{
        {"prime_set", prime_set_json(rep.prime_set)},
        {"bound_square", int_str(rep.bound_square)},
        {"minimal_square", int_str(rep.minimal_square)},
        {"witness", Json{{"a", int_str(rep.witness.a)},
                         {"b", int_str(rep.witness.b)},
                         {"c", int_str(rep.witness.c)},
                         {"e", int_str(rep.witness.e)},
                         {"d", int_str(rep.witness.d)}}},
        {"sharp", rep.sharp},
    };
}

}  // namespace smallgen
