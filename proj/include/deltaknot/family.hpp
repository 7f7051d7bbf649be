#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltaknot/catalog.hpp"
#include "deltaknot/fraction.hpp"
#include "deltaknot/word.hpp"

namespace dk {

/// Parameters of C(beta, beta_n..beta_1, 1,1,1,1,1, 1-beta_1, -beta_2..-beta_n).
struct FamilyParams {
  Entry beta = 0;
  std::vector<Entry> betas;  // beta_1 .. beta_n

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

std::string to_string(const FamilyParams& params);

/// The literal word; n = 0 gives C(beta, 1, 1, 1, 1, 1).
ConwayWord family_word(const FamilyParams& params);

/// Inverse of family_word on literal words.
std::optional<FamilyParams> match_family(const ConwayWord& word);

struct FamilyBounds {
  std::size_t n_max = 2;
  Entry beta_min = -8;
  Entry beta_max = 8;
  /// Enumeration stops after this many members and reports truncation.
  std::size_t max_members = 10'000'000;
};

struct FamilyMember {
  FamilyParams params;
  ConwayWord word;
  SchubertPair pair;
  bool trivial = false;
  bool link = false;
  std::optional<std::string> name;
  Verdict chirality = Verdict::Distinct;
  std::optional<Entry> a2;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

/// Evaluates one member; trivial and link members carry no a2.
FamilyMember family_member(const FamilyParams& params);

/// Thrown when a nontrivial member has |a2| != 1.
class FamilyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FamilyScan {
  std::vector<FamilyMember> members;
  /// True when max_members cut the enumeration short.
  bool truncated = false;
  friend bool operator==(const FamilyScan&, const FamilyScan&) = default;
};

/// Every member with n <= n_max and all parameters in [beta_min, beta_max],
/// ordered by n, then lexicographically by (beta, beta_1, ..., beta_n).
/// Runs in parallel when OpenMP is available; the order is the same.
/// Throws FamilyViolation if a nontrivial member has |a2| != 1.
FamilyScan enumerate_family(const FamilyBounds& bounds);
/// Single-threaded reference for enumerate_family.
FamilyScan enumerate_family_serial(const FamilyBounds& bounds);

std::size_t family_size(const FamilyBounds& bounds);
/// Parameters of the index-th member in enumeration order.
FamilyParams family_params_at(const FamilyBounds& bounds, std::size_t index);

/// Enumeration-least parameters whose word is the input's class up to mirror.
std::optional<FamilyParams> express_in_family(const ConwayWord& word, const FamilyBounds& bounds = {});

struct Table1Row {
  std::string name;
  ConwayWord normal_form;
  std::vector<ConwayWord> examples;
  std::vector<Verdict> verdicts;
  bool pass = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool pass = false;
};

Table1Report verify_table1();

struct Table2Cell {
  std::string row;
  std::string column;
  /// One value for an exact cell, two for an "a or b" cell.
  std::vector<Entry> expected;
  std::vector<Entry> computed;
  bool pass = false;
};

struct Table2Report {
  std::vector<std::string> names;
  std::vector<ConwayWord> words;
  std::vector<Table2Cell> cells;  // upper triangle, row-major, diagonal included
  bool pass = false;
};

Table2Report verify_table2();

}  // namespace dk
