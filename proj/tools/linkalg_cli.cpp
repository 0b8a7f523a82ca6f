#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>

#include "linkalg/verify.hpp"
#include "linkalg/words.hpp"

namespace {

using linkalg::json;

long long candidate_cap_default() {
  if (const char* env = std::getenv("LINKALG_CANDIDATE_CAP"))
    return std::atoll(env);
  return 10'000'000;
}

void print_report_human(const linkalg::VerificationReport& report) {
  std::cout << "verification for q = " << report.q
            << " (seed " << report.options.seed << ", span "
            << report.options.span << ")\n";
  for (const auto& c : report.checks)
    std::cout << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name
              << ": " << c.details << "\n";
  if (report.all_passed())
    std::cout << "orbit set: isomorphic to Z, generated by ["
              << report.generator << "]\n";
  else
    std::cout << "verification FAILED\n";
  std::cout << "elapsed: " << report.elapsed_ms << " ms\n";
}

int run_verify(long q, std::uint64_t seed, long span, bool as_json) {
  linkalg::VerifyOptions options;
  options.seed = seed;
  options.span = span;
  options.candidate_cap = candidate_cap_default();
  linkalg::VerificationReport report = linkalg::run_verification(q, options);
  if (as_json)
    std::cout << linkalg::report_to_json(report).dump(2) << "\n";
  else
    print_report_human(report);
  return report.all_passed() ? 0 : 1;
}

int run_union(long q, long n, bool as_json) {
  json report = linkalg::union_report(q, n);
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  std::cout << "union of (2q) with itself along class " << n << " (q = " << q
            << ", h = " << report.at("h").get<std::string>() << ")\n";
  const auto& gram = report.at("gram").at("gram");
  for (const auto& row : gram) {
    std::cout << "  [ ";
    for (const auto& entry : row)
      std::cout << linkalg::to_string(linkalg::poly_from_json(entry)) << " ; ";
    std::cout << "]\n";
  }
  std::cout << "even: " << (report.at("even").get<bool>() ? "yes" : "no")
            << ", det class: " << report.at("det_class").dump()
            << ", signature at 1: " << report.at("signature_at_1").get<long>()
            << "\n";
  return 0;
}

int run_words_eval(const std::string& literal, long m) {
  linkalg::FreeProductWord w = linkalg::parse_word(literal, m);
  json out{{"m", m},
           {"reduced", linkalg::to_string(w)},
           {"t_exponent_sum", linkalg::t_exponent_sum(w)}};
  if (linkalg::t_exponent_sum(w) == 0) {
    linkalg::LaurentPoly p = linkalg::word_to_poly(w);
    out["kernel_class"] = linkalg::poly_to_json(p);
    out["kernel_class_printed"] = linkalg::to_string(p);
    out["order"] = linkalg::order_in_kernel_ab(w);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of linking-form algebra over Z[t^{+-1}]"};
  app.require_subcommand(1);

  long q = 3, n = 0, n1 = 0, n2 = 0, m = 6, span = 2;
  std::uint64_t seed = 1;
  bool as_json = false;
  std::string poly_json, word_literal;

  auto* verify = app.add_subcommand("verify", "run the verification pipeline");
  verify->add_option("--q", q, "odd prime")->required();
  verify->add_option("--seed", seed, "seed for randomized batches");
  verify->add_option("--span", span, "exponent span for enumeration");
  verify->add_flag("--json", as_json, "emit the JSON report");

  auto* dist = app.add_subcommand(
      "distinguish", "compare the boundary-isometry classes of two manifolds");
  dist->add_option("--q", q, "odd prime")->required();
  dist->add_option("--n1", n1, "first class")->required();
  dist->add_option("--n2", n2, "second class")->required();

  auto* uni = app.add_subcommand("union",
                                 "glue (2q) to itself along a class-n "
                                 "boundary isometry");
  uni->add_option("--q", q, "odd prime")->required();
  uni->add_option("--n", n, "orbit class")->required();
  uni->add_flag("--json", as_json, "emit JSON");

  auto* units = app.add_subcommand("units", "unitary unit computations");
  units->require_subcommand(1);
  auto* uclassify = units->add_subcommand("classify", "orbit class of a unit");
  uclassify->add_option("--m", m, "modulus 2q")->required();
  uclassify->add_option("--poly", poly_json, "unit as JSON")->required();
  auto* uenum = units->add_subcommand("enum", "enumerate unitary units");
  uenum->add_option("--m", m, "modulus")->required();
  uenum->add_option("--span", span, "exponent span");
  auto* utheta = units->add_subcommand("theta", "canonical unit of class n");
  utheta->add_option("--q", q, "odd prime")->required();
  utheta->add_option("--n", n, "class")->required();

  auto* words = app.add_subcommand("words", "free product word algebra");
  words->require_subcommand(1);
  auto* weval = words->add_subcommand("eval", "reduce and scan a word");
  weval->add_option("literal", word_literal, "word literal, e.g. \"x t^-1 x\"")
      ->required();
  weval->add_option("--m", m, "order of x")->required();

  auto* z8 = app.add_subcommand("counterexample-z8",
                                "the mod-8 symmetric-but-not-quadratic case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(q, seed, span, as_json);
    if (*dist) {
      std::cout << linkalg::certificate_to_json(linkalg::distinguish(q, n1, n2))
                       .dump(2)
                << "\n";
      return 0;
    }
    if (*uni) return run_union(q, n, as_json);
    if (*uclassify) {
      linkalg::LaurentPoly u =
          linkalg::poly_from_json(json::parse(poly_json));
      if (!u.modulus()) u = linkalg::reduce_mod(u, m);
      if (u.modulus() != std::optional<long>(m))
        throw std::invalid_argument("units classify: modulus mismatch");
      json out{{"m", m},
               {"class", linkalg::classify_unit(u).k},
               {"poly", linkalg::poly_to_json(u)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*uenum) {
      json list = json::array();
      for (const auto& u :
           linkalg::enumerate_unitary(m, span, candidate_cap_default()))
        list.push_back(linkalg::poly_to_json(u.poly));
      json out{{"m", m}, {"span", span}, {"count", list.size()},
               {"units", std::move(list)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*utheta) {
      linkalg::UnitaryUnit u = linkalg::orbit_unit(n, q);
      json out{{"q", q},
               {"n", n},
               {"unit", linkalg::poly_to_json(u.poly)},
               {"printed", linkalg::to_string(linkalg::lift_plain(u.poly))}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*weval) return run_words_eval(word_literal, m);
    if (*z8) {
      std::cout << linkalg::counterexample_z8().dump(2) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
