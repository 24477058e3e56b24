#include "cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "bssrw/cake/fairness.hpp"
#include "bssrw/certificates/certificate.hpp"
#include "bssrw/certificates/trinomial.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/integer.hpp"
#include "bssrw/exact/roots.hpp"
#include "bssrw/protocols/protocols.hpp"
#include "cli/allocation_file.hpp"
#include "cli/report.hpp"

namespace bssrw::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Measure> load_measures(const std::string& path) {
  try {
    return parse_measures(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

// Accepts "p/q", decimals and "1e-12" style powers of ten.
Rational parse_width(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) {
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      Integer den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return parse_rational(digits) / Rational(den);
    }
    return parse_rational(text);
  }
  const Rational mantissa = parse_width(text.substr(0, e));
  const int exponent = std::stoi(text.substr(e + 1));
  Rational scale = 1;
  for (int i = 0; i < std::abs(exponent); ++i) scale *= 10;
  return exponent < 0 ? Rational(mantissa / scale) : Rational(mantissa * scale);
}

std::string underscored(std::string name) {
  for (char& c : name)
    if (c == '-') c = '_';
  return name;
}

// The largest prime monomial degree among the measures: the radical index a
// tower built from their queries is expected to use.
unsigned default_step_prime(const std::vector<Measure>& measures) {
  unsigned best = 0;
  for (const auto& m : measures) {
    const auto d = m.monomial_degree();
    if (d && *d > 1 && is_prime(static_cast<long>(*d)) && *d > best) best = *d;
  }
  if (best == 0) throw DomainError("no prime monomial degree among the measures; pass --p");
  return best;
}

struct Options {
  std::string format = "text";
  int digits = 12;
  std::string measures;
  std::string allocation;
  std::string protocol;
  std::string target;
  std::string family = "plus-minus";
  std::string width = "1e-12";
  int d = 0;
  int n = 0;
  int p = 0;
  bool allow_sqrt = false;
};

void emit(const Report& report, const Options& opt, std::ostream& out) {
  if (opt.format == "json")
    out << report.json.dump(2) << "\n";
  else
    out << report.text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact-arithmetic cake-cutting lab", "bssrw"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--digits", opt.digits, "Decimal digits shown next to exact values")->check(CLI::Range(1, 200));

  auto* run_protocol_cmd = app.add_subcommand("run-protocol", "Run a protocol on a measure file");
  run_protocol_cmd->add_option("protocol", opt.protocol, "cut-and-choose, last-diminisher, even-paz, selfridge-conway")
      ->required();
  run_protocol_cmd->add_option("--measures", opt.measures, "Measure file")->required();

  auto* fairness_cmd = app.add_subcommand("check-fairness", "Audit an allocation file");
  fairness_cmd->add_option("--measures", opt.measures, "Measure file")->required();
  fairness_cmd->add_option("--allocation", opt.allocation, "Allocation file")->required();

  auto* welfare_cmd = app.add_subcommand("max-welfare", "Welfare-maximising allocation");
  welfare_cmd->add_option("--measures", opt.measures, "Measure file")->required();

  auto* impossibility_cmd = app.add_subcommand("check-impossibility", "Build an impossibility certificate");
  impossibility_cmd->add_option("target", opt.target, "equitable or welfare")
      ->required()
      ->check(CLI::IsMember({"equitable", "welfare"}));
  impossibility_cmd->add_option("--d", opt.d, "Degree of the second measure x^d");
  impossibility_cmd->add_option("--n", opt.n, "Number of players");
  impossibility_cmd->add_option("--p", opt.p, "Prime degree of the last measure x^p");
  impossibility_cmd->add_flag("--allow-sqrt", opt.allow_sqrt, "Allow square-root mediators");

  auto* trinomial_cmd = app.add_subcommand("analyze-trinomial", "Classify T^d + T - 1 and its relatives");
  trinomial_cmd->add_option("--d", opt.d, "Degree")->required();
  trinomial_cmd->add_option("--family", opt.family, "plus-minus, plus-plus or minus-minus")
      ->check(CLI::IsMember({"plus-minus", "plus-plus", "minus-minus"}));

  auto* cutpoint_cmd = app.add_subcommand("isolate-cutpoint", "Equitable cutpoint of two measures");
  cutpoint_cmd->add_option("--measures", opt.measures, "Measure file with two players")->required();
  cutpoint_cmd->add_option("--width", opt.width, "Target interval width");

  auto* tower_cmd = app.add_subcommand("verify-tower", "Check step degrees of a protocol's field tower");
  tower_cmd->add_option("protocol", opt.protocol, "Protocol name")->required();
  tower_cmd->add_option("--measures", opt.measures, "Measure file")->required();
  tower_cmd->add_option("--p", opt.p, "Allowed step degree besides 1");

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    if (*run_protocol_cmd) {
      auto measures = load_measures(opt.measures);
      emit(protocol_report(run_protocol(underscored(opt.protocol), std::move(measures)), opt.digits), opt, out);
    } else if (*fairness_cmd) {
      const auto measures = load_measures(opt.measures);
      const Allocation alloc = parse_allocation(read_file(opt.allocation), measures);
      emit(fairness_report(alloc, measures, opt.digits), opt, out);
    } else if (*welfare_cmd) {
      const auto measures = load_measures(opt.measures);
      emit(welfare_report(max_welfare(measures), measures, opt.digits), opt, out);
    } else if (*impossibility_cmd) {
      Certificate cert;
      if (opt.target == "equitable") {
        if (impossibility_cmd->count("--d") == 0) throw DomainError("check-impossibility equitable requires --d");
        cert = check_impossibility_equitable(opt.d, opt.allow_sqrt);
      } else {
        if (impossibility_cmd->count("--n") == 0 || impossibility_cmd->count("--p") == 0)
          throw DomainError("check-impossibility welfare requires --n and --p");
        cert = check_impossibility_welfare(opt.n, opt.p);
      }
      emit(certificate_report(cert), opt, out);
      return cert.verdict == Verdict::impossible ? exit_ok : exit_no_obstruction;
    } else if (*trinomial_cmd) {
      const TrinomialFamily family = opt.family == "plus-plus"     ? TrinomialFamily::plus_plus
                                     : opt.family == "minus-minus" ? TrinomialFamily::minus_minus
                                                                   : TrinomialFamily::plus_minus;
      emit(trinomial_report(selmer_classify(opt.d, family)), opt, out);
    } else if (*cutpoint_cmd) {
      const auto measures = load_measures(opt.measures);
      if (measures.size() != 2) throw DomainError("isolate-cutpoint needs exactly two measures");
      const Rational width = parse_width(opt.width);
      if (width <= 0) throw DomainError("--width must be positive");
      const EquitableCutpoint cut = isolate_equitable_cutpoint(measures[0], measures[1]);
      DyadicInterval refined = cut.t.isolator();
      if (cut.t.is_rational()) {
        const Rational t = *cut.t.to_rational();
        refined = DyadicInterval(t, t);
      } else {
        refined = refine_root(cut.t.minpoly(), refined, width);
      }
      emit(cutpoint_report(measures, cut, refined, opt.digits), opt, out);
    } else if (*tower_cmd) {
      auto measures = load_measures(opt.measures);
      const unsigned p = tower_cmd->count("--p") ? static_cast<unsigned>(opt.p) : default_step_prime(measures);
      if (p < 2) throw DomainError("--p must be at least 2");
      const ProtocolRun run = run_protocol(underscored(opt.protocol), std::move(measures));
      const StepDegreeReport check = verify_step_degrees(run.session.tower(), p);
      emit(step_degree_report(run, check), opt, out);
      return check.passed ? exit_ok : exit_no_obstruction;
    }
  } catch (const OutsideCoveredCases& e) {
    err << "error: " << e.what() << "\n";
    return exit_outside_cases;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}

}  // namespace bssrw::cli
