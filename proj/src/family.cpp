#include "deltaknot/family.hpp"

#include <stdexcept>

#include "deltaknot/distance.hpp"
#include "deltaknot/invariants.hpp"

namespace dk {

std::string to_string(const FamilyParams& params) {
  std::string s = "beta=" + std::to_string(params.beta) + ",betas=[";
  for (std::size_t i = 0; i < params.betas.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params.betas[i]);
  }
  return s + "]";
}

ConwayWord family_word(const FamilyParams& params) {
  const auto& b = params.betas;
  std::vector<Entry> out{params.beta};
  for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(*it);
  for (int i = 0; i < 5; ++i) out.push_back(1);
  if (!b.empty()) {
    out.push_back(1 - b[0]);
    for (std::size_t i = 1; i < b.size(); ++i) out.push_back(-b[i]);
  }
  return ConwayWord(std::move(out));
}

std::optional<FamilyParams> match_family(const ConwayWord& w) {
  const std::size_t len = w.size();
  if (len < 6 || len == 7 || len % 2 != 0) return std::nullopt;
  const std::size_t n = (len - 6) / 2;
  FamilyParams params;
  params.beta = w[0];
  for (std::size_t i = 1; i <= n; ++i) params.betas.push_back(w[n + 1 - i]);
  if (family_word(params) != w) return std::nullopt;
  return params;
}

FamilyMember family_member(const FamilyParams& params) {
  FamilyMember m;
  m.params = params;
  m.word = family_word(params);
  m.pair = evaluate_fraction(m.word);
  m.link = !m.pair.is_knot();
  m.trivial = m.pair.is_unknot();
  if (!m.link && !m.trivial) {
    m.a2 = a2_skein(m.word).value;
    const CatalogMatch match = catalog_lookup(m.pair);
    if (match.status == CatalogMatch::Status::Found) {
      m.name = match.identity->name;
      m.chirality = match.chirality;
    }
  }
  return m;
}

std::size_t family_size(const FamilyBounds& bounds) {
  if (bounds.beta_max < bounds.beta_min) return 0;
  const std::size_t r = static_cast<std::size_t>(bounds.beta_max - bounds.beta_min + 1);
  std::size_t total = 0;
  std::size_t block = r;
  for (std::size_t n = 0; n <= bounds.n_max; ++n) {
    total += block;
    block *= r;
  }
  return total;
}

FamilyParams family_params_at(const FamilyBounds& bounds, std::size_t index) {
  const std::size_t r = static_cast<std::size_t>(bounds.beta_max - bounds.beta_min + 1);
  std::size_t block = r;
  std::size_t n = 0;
  while (index >= block) {
    index -= block;
    block *= r;
    ++n;
  }
  // Digits, most significant first: beta, beta_1, ..., beta_n.
  std::vector<Entry> digits(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) {
    digits[k] = bounds.beta_min + static_cast<Entry>(index % r);
    index /= r;
  }
  FamilyParams p;
  p.beta = digits[0];
  p.betas.assign(digits.begin() + 1, digits.end());
  return p;
}

namespace {

void check_members(const std::vector<FamilyMember>& members) {
  for (const auto& m : members) {
    if (m.a2 && *m.a2 != 1 && *m.a2 != -1) {
      throw FamilyViolation("family member " + to_string(m.params) + " = " + to_string(m.word) +
                            " is a nontrivial knot with a2 = " + std::to_string(*m.a2) +
                            "; expected |a2| = 1");
    }
  }
}

std::size_t scan_count(const FamilyBounds& bounds, bool& truncated) {
  const std::size_t total = family_size(bounds);
  truncated = total > bounds.max_members;
  return truncated ? bounds.max_members : total;
}

}  // namespace

FamilyScan enumerate_family_serial(const FamilyBounds& bounds) {
  FamilyScan scan;
  const std::size_t count = scan_count(bounds, scan.truncated);
  scan.members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) scan.members.push_back(family_member(family_params_at(bounds, i)));
  check_members(scan.members);
  return scan;
}

FamilyScan enumerate_family(const FamilyBounds& bounds) {
  FamilyScan scan;
  const std::size_t count = scan_count(bounds, scan.truncated);
  scan.members.resize(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    scan.members[static_cast<std::size_t>(i)] = family_member(family_params_at(bounds, static_cast<std::size_t>(i)));
  }
  check_members(scan.members);
  return scan;
}

std::optional<FamilyParams> express_in_family(const ConwayWord& word, const FamilyBounds& bounds) {
  const SchubertPair pair = evaluate_fraction(word);
  if (!pair.is_knot() || pair.is_unknot()) return std::nullopt;
  // Every nontrivial member has |a2| = 1 (checked by enumerate_family), and
  // a2 is a class invariant, so nothing else can have a witness.
  const Entry a2 = a2_skein(word).value;
  if (a2 != 1 && a2 != -1) return std::nullopt;
  const std::size_t count = std::min(family_size(bounds), bounds.max_members);
  for (std::size_t i = 0; i < count; ++i) {
    FamilyParams params = family_params_at(bounds, i);
    if (equivalent(evaluate_fraction(family_word(params)), pair) != Verdict::Distinct) return params;
  }
  return std::nullopt;
}

namespace {

struct Table1Source {
  const char* name;
  ConwayWord normal_form;
  ConwayWord first;
  ConwayWord second;
};

std::vector<Table1Source> table1_rows() {
  return {
      {"3_1", {3}, {-2, 0, 1, 1, 1, 1, 1, 1}, {3, -1, 1, 1, 1, 1, 1, 2}},
      {"4_1", {2, 2}, {-1, 0, 1, 1, 1, 1, 1, 1}, {2, -1, 1, 1, 1, 1, 1, 2}},
      {"6_2", {3, 1, 2}, {-3, 0, 1, 1, 1, 1, 1, 1}, {4, -1, 1, 1, 1, 1, 1, 2}},
      {"6_3", {2, 1, 1, 2}, {0, 0, 1, 1, 1, 1, 1, 1}, {1, -1, 1, 1, 1, 1, 1, 2}},
      {"7_6", {2, 2, 1, 2}, {-4, 0, 1, 1, 1, 1, 1, 1}, {5, -1, 1, 1, 1, 1, 1, 2}},
      {"7_7", {2, 1, 1, 1, 2}, {1, 0, 1, 1, 1, 1, 1, 1}, {0, -1, 1, 1, 1, 1, 1, 2}},
      {"8_11", {3, 2, 1, 2}, {-5, 0, 1, 1, 1, 1, 1, 1}, {6, -1, 1, 1, 1, 1, 1, 2}},
      {"8_13", {3, 1, 1, 1, 2}, {2, 0, 1, 1, 1, 1, 1, 1}, {-1, -1, 1, 1, 1, 1, 1, 2}},
      {"9_12", {4, 2, 1, 2}, {-6, 0, 1, 1, 1, 1, 1, 1}, {7, -1, 1, 1, 1, 1, 1, 2}},
      {"9_14", {4, 1, 1, 1, 2}, {3, 0, 1, 1, 1, 1, 1, 1}, {-2, -1, 1, 1, 1, 1, 1, 2}},
      {"10_7", {5, 2, 1, 2}, {-7, 0, 1, 1, 1, 1, 1, 1}, {8, -1, 1, 1, 1, 1, 1, 2}},
      {"10_10", {5, 1, 1, 1, 2}, {4, 0, 1, 1, 1, 1, 1, 1}, {-3, -1, 1, 1, 1, 1, 1, 2}},
      {"10_19", {4, 1, 1, 1, 3}, {1, 3, 1, 1, 1, 1, 1, -2}, {2, -2, 1, 1, 1, 1, 1, 3}},
      {"10_32", {3, 1, 1, 1, 2, 2}, {-2, 3, 1, 1, 1, 1, 1, -2}, {-1, -2, 1, 1, 1, 1, 1, 3}},
  };
}

}  // namespace

Table1Report verify_table1() {
  Table1Report report;
  report.pass = true;
  for (auto& src : table1_rows()) {
    Table1Row row;
    row.name = src.name;
    row.normal_form = src.normal_form;
    row.examples = {src.first, src.second};
    row.pass = true;
    for (const auto& ex : row.examples) {
      const Verdict v = equivalent(ex, row.normal_form);
      row.verdicts.push_back(v);
      row.pass = row.pass && v != Verdict::Distinct;
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Table2Report verify_table2() {
  Table2Report report;
  report.names = {"4_1", "6_1", "8_1", "8_3", "10_1", "10_3"};
  report.words = {{2, 2}, {4, 2}, {6, 2}, {4, 4}, {8, 2}, {6, 4}};
  const std::vector<std::vector<std::vector<Entry>>> expected = {
      {{0}, {1}, {2}, {3}, {3}, {5}},
      {{0}, {1}, {2}, {2}, {4}},
      {{0}, {1, 3}, {1}, {3}},
      {{0}, {2, 4}, {2}},
      {{0}, {2, 4}},
      {{0}},
  };
  report.pass = true;
  for (std::size_t i = 0; i < report.words.size(); ++i) {
    for (std::size_t j = i; j < report.words.size(); ++j) {
      Table2Cell cell;
      cell.row = report.names[i];
      cell.column = report.names[j];
      cell.expected = expected[i][j - i];
      const DeltaBoundReport d = dg_bounds(report.words[i], report.words[j]);
      cell.computed.push_back(d.lower);
      if (!d.exact && d.upper) cell.computed.push_back(*d.upper);
      cell.pass = cell.computed == cell.expected && (d.exact || d.upper);
      report.pass = report.pass && cell.pass;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace dk
