#ifndef SMALLGEN_JSONIO_HPP
#define SMALLGEN_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "smallgen/adelic.hpp"
#include "smallgen/quadsharp.hpp"

namespace smallgen {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings; reals as {"value", "error"} decimal
// strings so nothing is lost to binary floating point.
std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);
Json real_json(const Real& x);
Real parse_real(const Json& j);

// {"poly": [c0, ..., 1], "disc": optional, "basis": optional rows of "num/den"}
FieldPtr parse_field_spec(const Json& spec, bool override_irreducibility = false);

Json field_info_json(const FieldPtr& k);
Json certificate_json(const GeneratorCertificate& cert);
GeneratorCertificate parse_certificate(const Json& j, bool override_irreducibility = false);
Json prime_set_json(const PrimeSet& ps);
Json splitting_json(const SplittingType& st);
Json cheb_json(const ChebReport& rep);
Json census_json(const FrobeniusCensus& c);
Json sharpness_json(const SharpnessReport& rep);

}  // namespace smallgen

#endif
