#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "deltaknot/bounds.hpp"
#include "deltaknot/catalog.hpp"
#include "deltaknot/family.hpp"

namespace dk {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// RFC 4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view field);

// JSON conversions. Words are stored as their C(...) text.
void to_json(nlohmann::json& j, const Move& move);
void from_json(const nlohmann::json& j, Move& move);
void to_json(nlohmann::json& j, const MoveSequence& seq);
void from_json(const nlohmann::json& j, MoveSequence& seq);
void to_json(nlohmann::json& j, const AssertedValue& value);
void from_json(const nlohmann::json& j, AssertedValue& value);
void to_json(nlohmann::json& j, const DeltaBoundReport& report);
void from_json(const nlohmann::json& j, DeltaBoundReport& report);
void to_json(nlohmann::json& j, const FamilyMember& member);
void from_json(const nlohmann::json& j, FamilyMember& member);
void to_json(nlohmann::json& j, const KnotIdentity& identity);
void to_json(nlohmann::json& j, const Table1Report& report);
void to_json(nlohmann::json& j, const Table2Report& report);

/// What `identify` prints about a word.
struct Identification {
  ConwayWord word;
  SchubertPair pair;
  bool knot = false;
  std::optional<std::string> name;
  Verdict chirality = Verdict::Distinct;
  bool amphichiral = false;
  std::optional<Entry> a2;
};

Identification identify(const ConwayWord& word);
void to_json(nlohmann::json& j, const Identification& id);

std::string emit(const Identification& id, Format format);
std::string emit_a2(const ConwayWord& word, Entry a2, Format format);
/// `subject` labels the report: the word, or "w1 w2" for distances.
std::string emit(const DeltaBoundReport& report, std::string_view subject, Format format);
std::string emit(const Table1Report& report, Format format);
/// CSV is the 6x6 matrix with the lower triangle left empty.
std::string emit(const Table2Report& report, Format format);
/// JSON is one object per line.
std::string emit(const FamilyScan& scan, Format format);
std::string emit_catalog(Format format);

}  // namespace dk
