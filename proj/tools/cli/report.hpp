#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/fairness.hpp"
#include "bssrw/certificates/certificate.hpp"
#include "bssrw/certificates/trinomial.hpp"
#include "bssrw/protocols/protocols.hpp"
#include "bssrw/tower/tower.hpp"

namespace bssrw::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Every report exists as text and as JSON carrying the same fields.
struct Report {
  std::string text;
  Json json;
};

Json number_json(const AlgebraicNumber& x, int digits);
Json tower_json(const Tower& tower);

Report protocol_report(const ProtocolRun& run, int digits);
Report fairness_report(const Allocation& alloc, const std::vector<Measure>& measures, int digits);
Report welfare_report(const Allocation& alloc, const std::vector<Measure>& measures, int digits);
Report certificate_report(const Certificate& cert);
Report trinomial_report(const TrinomialClass& cls);
Report cutpoint_report(const std::vector<Measure>& measures, const EquitableCutpoint& cut, const DyadicInterval& refined,
                       int digits);
Report step_degree_report(const ProtocolRun& run, const StepDegreeReport& check);

}  // namespace bssrw::cli
