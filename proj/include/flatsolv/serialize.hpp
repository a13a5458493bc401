// Text and JSON formats shared by the C surface and the test suites.
#pragma once

#include "json.hpp"

#include "flatsolv/enumeration.hpp"
#include "flatsolv/lattice.hpp"

namespace flatsolv {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Spectrum grammar: "s=<int>;f=<p>/<q>[,<p>/<q>...]"; the fraction list may
// be omitted for pure tori. Fractions are auto-folded into (0, 1/2]; zero or
// out-of-range fractions are rejected.
RotationSpectrum parse_spectrum(const std::string& text);

Json to_json(const Rational& r);
Json to_json(const TurnFraction& f);
Json to_json(const RotationSpectrum& sp);
Json to_json(const IntPolynomial& p);
Json to_json(const OrbitCertificate& cert);
Json to_json(const Obstruction& obs);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const IntMatrix& m);
Json to_json(const RealMatrix& m);
Json to_json(const LatticeDescriptor& lat);
Json to_json(const SolvmanifoldSpec& spec);
Json to_json(const GroupWitness& gw);
Json to_json(const DimensionReport& report);
Json to_json(const PlatycosmRow& row);
Json to_json(const AdmissiblePair& pair);

// Embedded golden tables recomputed against the enumeration; the report
// carries one entry per table with an ok flag.
Json seed_check_report();

}  // namespace flatsolv
