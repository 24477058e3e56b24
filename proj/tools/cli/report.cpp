#include "cli/report.hpp"

#include <sstream>

#include "bssrw/exact/interval.hpp"

namespace bssrw::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string kind_name(StepKind k, unsigned index) {
  switch (k) {
    case StepKind::trivial: return "trivial";
    case StepKind::radical: return "radical^" + std::to_string(index);
    case StepKind::sqrt: return "sqrt";
    case StepKind::algebraic: return "algebraic";
  }
  return {};
}

Json pieces_json(const Allocation& alloc, const std::vector<Measure>& measures, int digits) {
  Json players = Json::array();
  for (std::size_t i = 0; i < alloc.players(); ++i) {
    Json pieces = Json::array();
    for (const auto& p : alloc.pieces[i])
      pieces.push_back(Json{{"lo", number_json(p.lo, digits)}, {"hi", number_json(p.hi, digits)}});
    players.push_back(Json{{"player", measures[i].label()},
                           {"pieces", pieces},
                           {"value", number_json(share_value(measures[i], alloc.pieces[i]), digits)}});
  }
  return players;
}

std::string witness_text(const std::optional<FairnessWitness>& w, const std::vector<Measure>& m, int digits,
                         const char* relation) {
  if (!w) return "";
  return " (" + m[w->i].label() + "/" + m[w->j].label() + ": " + w->lhs.display(digits) + " " + relation + " " +
         w->rhs.display(digits) + ")";
}

Json witness_json(const std::optional<FairnessWitness>& w, const std::vector<Measure>& m, int digits) {
  if (!w) return nullptr;
  return Json{{"i", m[w->i].label()},
              {"j", m[w->j].label()},
              {"lhs", number_json(w->lhs, digits)},
              {"rhs", number_json(w->rhs, digits)}};
}

void append_fairness(std::string& text, Json& json, const FairnessReport& r, const std::vector<Measure>& m,
                     int digits) {
  text += "fairness:\n";
  text += "  proportional: " + yes_no(r.proportional) + witness_text(r.proportional_witness, m, digits, "<") + "\n";
  text += "  envy-free: " + yes_no(r.envy_free) + witness_text(r.envy_witness, m, digits, "<") + "\n";
  text += "  equitable: " + yes_no(r.equitable) + witness_text(r.equitable_witness, m, digits, "!=") + "\n";
  json["fairness"] = Json{{"proportional", r.proportional},
                          {"proportional_witness", witness_json(r.proportional_witness, m, digits)},
                          {"envy_free", r.envy_free},
                          {"envy_witness", witness_json(r.envy_witness, m, digits)},
                          {"equitable", r.equitable},
                          {"equitable_witness", witness_json(r.equitable_witness, m, digits)}};
}

Json factor_list_json(const std::vector<FactorDegree>& fs) {
  Json out = Json::array();
  for (const auto& f : fs)
    out.push_back(Json{{"factor", to_string(f.factor, "T")}, {"multiplicity", f.multiplicity}, {"degree", f.degree}});
  return out;
}

}  // namespace

Json number_json(const AlgebraicNumber& x, int digits) {
  Json j;
  if (auto r = x.to_rational()) {
    j["exact"] = to_string(*r);
    j["decimal"] = to_decimal(*r, digits);
  } else {
    j["exact"] = nullptr;
    j["decimal"] = x.decimal(digits);
  }
  j["minpoly"] = to_string(x.minpoly());
  j["degree"] = x.degree();
  j["isolator"] = to_string(x.isolator());
  return j;
}

Json tower_json(const Tower& tower) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < tower.steps().size(); ++i) {
    const auto& s = tower.steps()[i];
    steps.push_back(Json{{"step", i + 1},
                         {"degree", s.degree},
                         {"kind", kind_name(s.kind, s.radical_index)},
                         {"source", s.source}});
  }
  return Json{{"steps", steps}, {"total_degree", tower.total_degree()}};
}

Report protocol_report(const ProtocolRun& run, int digits) {
  const Session& s = run.session;
  const auto& measures = s.measures();
  Report r;
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "run-protocol";
  r.json["protocol"] = run.protocol;

  r.text = "protocol: " + run.protocol + "\ntranscript:\n" + s.dump(digits);
  r.text += "total degree: " + std::to_string(s.tower().total_degree()) + "\n";
  Json transcript = Json::array();
  for (const auto& q : s.records()) {
    Json args = Json::array();
    for (const auto& a : q.args) args.push_back(number_json(a, digits));
    transcript.push_back(Json{{"id", q.id},
                              {"player", measures[q.player].label()},
                              {"kind", q.kind == QueryKind::cut ? "cut" : "eval"},
                              {"args", args},
                              {"answer", number_json(q.answer, digits)}});
  }
  r.json["transcript"] = transcript;
  r.json["tower"] = tower_json(s.tower());

  r.text += "allocation:\n" + describe(run.allocation, measures, digits);
  r.json["allocation"] = pieces_json(run.allocation, measures, digits);

  const FairnessReport fr = check_fairness(run.allocation, measures);
  append_fairness(r.text, r.json, fr, measures, digits);
  r.text += "guarantees:";
  Json guarantees = Json::object();
  for (Guarantee g : run.guarantees) {
    const bool holds = g == Guarantee::proportional ? fr.proportional : fr.envy_free;
    r.text += " " + to_string(g) + "=" + (holds ? "holds" : "VIOLATED");
    guarantees[to_string(g)] = holds;
  }
  r.text += "\nqueries: rw=" + std::to_string(s.rw_query_count()) + " bss=" + std::to_string(s.bss_op_count()) + "\n";
  r.json["guarantees"] = guarantees;
  r.json["rw_query_count"] = s.rw_query_count();
  r.json["bss_op_count"] = s.bss_op_count();
  return r;
}

Report fairness_report(const Allocation& alloc, const std::vector<Measure>& measures, int digits) {
  Report r;
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "check-fairness";
  const FairnessReport fr = check_fairness(alloc, measures);
  r.text = "allocation:\n" + describe(alloc, measures, digits);
  r.json["allocation"] = pieces_json(alloc, measures, digits);
  append_fairness(r.text, r.json, fr, measures, digits);
  const AlgebraicNumber w = welfare(alloc, measures);
  r.text += "welfare: " + w.display(digits) + "\n";
  r.json["welfare"] = number_json(w, digits);
  return r;
}

Report welfare_report(const Allocation& alloc, const std::vector<Measure>& measures, int digits) {
  Report r;
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "max-welfare";
  r.text = "cutpoints:";
  Json cuts = Json::array();
  for (const auto& c : alloc.cutpoints()) {
    r.text += " " + c.display(digits);
    cuts.push_back(number_json(c, digits));
  }
  if (cuts.empty()) r.text += " (none)";
  r.text += "\nallocation:\n" + describe(alloc, measures, digits);
  r.json["cutpoints"] = cuts;
  r.json["allocation"] = pieces_json(alloc, measures, digits);
  const AlgebraicNumber w = welfare(alloc, measures);
  r.text += "welfare: " + w.display(digits) + "\n";
  r.json["welfare"] = number_json(w, digits);
  return r;
}

Report certificate_report(const Certificate& cert) {
  Report r;
  r.text = cert.text();
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "check-impossibility";
  r.json["target"] = cert.target;
  r.json["equation"] = to_string(cert.equation, "T");
  r.json["factorization"] = factor_list_json(cert.factorization);
  r.json["real_root_factor"] = Json{{"factor", to_string(cert.real_root_factor, "T")},
                                    {"isolator", to_string(cert.real_root_isolator)},
                                    {"degree", cert.real_root_degree()}};
  r.json["tower_primes"] = cert.tower_primes;
  r.json["galois"] = cert.galois_fact;
  r.json["verdict"] = to_string(cert.verdict);
  Json narrative = Json::array();
  for (const auto& s : cert.narrative) narrative.push_back(Json{{"anchor", s.anchor}, {"text", s.text}});
  r.json["narrative"] = narrative;
  return r;
}

Report trinomial_report(const TrinomialClass& cls) {
  Report r;
  const std::string poly = to_string(cls.trinomial, "T");
  std::string galois, solvable;
  switch (cls.galois) {
    case GaloisInfo::symmetric:
      galois = "S_" + std::to_string(cls.d);
      solvable = cls.d >= 5 ? "not solvable by radicals" : "solvable by radicals";
      break;
    case GaloisInfo::unknown: galois = "unknown"; solvable = "solvability unknown"; break;
    case GaloisInfo::not_applicable:
      galois = "n/a";
      solvable = cls.d <= 4 ? "solvable by radicals (degree <= 4)" : "solvability follows from the factors";
      break;
  }
  std::string status = to_string(cls.status);
  r.text = poly + ": " + status + "; Galois group " + galois + "; " + solvable + "\n";
  if (cls.factor) r.text += "factorization: (" + to_string(*cls.factor, "T") + ")(" + to_string(*cls.cofactor, "T") + ")\n";
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "analyze-trinomial";
  r.json["trinomial"] = poly;
  r.json["d"] = cls.d;
  r.json["status"] = status;
  r.json["galois"] = galois;
  r.json["solvability"] = solvable;
  r.json["factor"] = cls.factor ? Json(to_string(*cls.factor, "T")) : Json(nullptr);
  r.json["cofactor"] = cls.cofactor ? Json(to_string(*cls.cofactor, "T")) : Json(nullptr);
  return r;
}

Report cutpoint_report(const std::vector<Measure>& measures, const EquitableCutpoint& cut, const DyadicInterval& refined,
                       int digits) {
  Report r;
  const Poly eq = equitable_equation(measures[0], measures[1]);
  r.text = "equation: " + to_string(eq, "T") + "\n";
  r.text += "cutpoint: " + cut.t.display(digits) + "\n";
  r.text += "minpoly: " + to_string(cut.t.minpoly(), "T") + "\n";
  r.text += "degree: " + std::to_string(cut.degree) + "\n";
  r.text += "interval: [" + to_decimal(refined.lo(), digits + 3) + ", " + to_decimal(refined.hi(), digits + 3) + "]\n";
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "isolate-cutpoint";
  r.json["equation"] = to_string(eq, "T");
  r.json["cutpoint"] = number_json(cut.t, digits);
  r.json["minpoly"] = to_string(cut.t.minpoly(), "T");
  r.json["degree"] = cut.degree;
  r.json["interval"] = Json{{"lo", to_string(refined.lo())}, {"hi", to_string(refined.hi())}};
  return r;
}

Report step_degree_report(const ProtocolRun& run, const StepDegreeReport& check) {
  Report r;
  r.text = "protocol: " + run.protocol + "\n" + run.session.tower().dump() + check.text();
  r.json["format_version"] = kFormatVersion;
  r.json["command"] = "verify-tower";
  r.json["protocol"] = run.protocol;
  r.json["prime"] = check.prime;
  r.json["tower"] = tower_json(run.session.tower());
  Json steps = Json::array();
  for (const auto& s : check.steps) steps.push_back(Json{{"step", s.position}, {"degree", s.degree}, {"ok", s.ok}});
  r.json["checks"] = steps;
  r.json["passed"] = check.passed;
  return r;
}

}  // namespace bssrw::cli
