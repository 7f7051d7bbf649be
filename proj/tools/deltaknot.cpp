// deltaknot: two-bridge knot invariants, Delta-unknotting bounds and table checks.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deltaknot/bounds.hpp"
#include "deltaknot/catalog.hpp"
#include "deltaknot/distance.hpp"
#include "deltaknot/family.hpp"
#include "deltaknot/invariants.hpp"
#include "deltaknot/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

struct InputError {
  std::string message;
};

dk::ConwayWord read_word(const std::string& text) {
  try {
    return dk::parse_word(text);
  } catch (const dk::ParseError& e) {
    throw InputError{dk::annotate_parse_error(text, e)};
  }
}

dk::ConwayWord read_knot(const std::string& text) {
  dk::ConwayWord w = read_word(text);
  if (!dk::evaluate_fraction(w).is_knot()) {
    throw InputError{"error: " + to_string(w) + " closes to a 2-component link, not a knot"};
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and Delta-move bounds for two-bridge knots in Conway normal form"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  bool seed_check = false;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--seed-convention-check", seed_check,
               "Verify the fraction convention against the catalog before running");

  std::string word1, word2;
  dk::Entry budget = dk::SearchOptions{}.budget;
  dk::FamilyBounds family;

  auto* identify = app.add_subcommand("identify", "Fraction class, catalog name and a2 of a word");
  identify->add_option("word", word1, "C(a1,...,an) or a1,...,an")->required();
  auto* a2 = app.add_subcommand("a2", "Second Conway coefficient");
  a2->add_option("word", word1)->required();
  auto* udelta = app.add_subcommand("udelta", "Bounds on the Delta-unknotting number");
  udelta->add_option("word", word1)->required();
  udelta->add_option("--budget", budget, "Largest move cost the search explores")->capture_default_str();
  auto* dgd = app.add_subcommand("dgd", "Bounds on the Delta-Gordian distance");
  dgd->add_option("word1", word1)->required();
  dgd->add_option("word2", word2)->required();
  dgd->add_option("--budget", budget, "Largest move cost the search explores")->capture_default_str();
  auto* table1 = app.add_subcommand("table1", "Check the Delta-one family representations");
  auto* table2 = app.add_subcommand("table2", "Recompute the two-twist distance table");
  auto* scan = app.add_subcommand("scan-family", "Enumerate the Delta-one family");
  scan->add_option("--n-max", family.n_max)->capture_default_str();
  scan->add_option("--beta-min", family.beta_min)->capture_default_str();
  scan->add_option("--beta-max", family.beta_max)->capture_default_str();
  scan->add_option("--max-members", family.max_members)->capture_default_str();
  auto* catalog = app.add_subcommand("catalog", "List the built-in knot catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  const dk::Format format = dk::parse_format(format_name);
  if (seed_check) {
    const auto failures = dk::check_convention();
    for (const auto& f : failures) std::cerr << "convention check: " << f << "\n";
    if (!failures.empty()) return kMismatch;
  }

  try {
    if (identify->parsed()) {
      std::cout << dk::emit(dk::identify(read_word(word1)), format);
    } else if (a2->parsed()) {
      const dk::ConwayWord w = read_knot(word1);
      std::cout << dk::emit_a2(w, dk::evaluate_fraction(w).is_unknot() ? 0 : dk::a2_skein(w).value, format);
    } else if (udelta->parsed()) {
      const dk::ConwayWord w = read_knot(word1);
      dk::SearchOptions options;
      options.budget = budget;
      std::cout << dk::emit(dk::bound_report(w, options), to_string(w), format);
    } else if (dgd->parsed()) {
      const dk::ConwayWord w1 = read_knot(word1);
      const dk::ConwayWord w2 = read_knot(word2);
      dk::SearchOptions options;
      options.budget = budget;
      std::cout << dk::emit(dk::dg_bounds(w1, w2, options), to_string(w1) + " " + to_string(w2), format);
    } else if (table1->parsed()) {
      const auto report = dk::verify_table1();
      std::cout << dk::emit(report, format);
      return report.pass ? kOk : kMismatch;
    } else if (table2->parsed()) {
      const auto report = dk::verify_table2();
      std::cout << dk::emit(report, format);
      return report.pass ? kOk : kMismatch;
    } else if (scan->parsed()) {
      if (family.beta_max < family.beta_min) throw InputError{"error: --beta-max is below --beta-min"};
      std::cout << dk::emit(dk::enumerate_family(family), format);
    } else if (catalog->parsed()) {
      std::cout << dk::emit_catalog(format);
    }
  } catch (const InputError& e) {
    std::cerr << e.message << (e.message.ends_with("\n") ? "" : "\n");
    return kBadInput;
  } catch (const dk::FamilyViolation& e) {
    std::cerr << "family check failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
