#include "deltaknot/report.hpp"

#include <sstream>
#include <stdexcept>

#include "deltaknot/invariants.hpp"

namespace dk {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string join_values(const std::vector<Entry>& values, std::string_view sep) {
  std::vector<std::string> s;
  for (Entry v : values) s.push_back(std::to_string(v));
  return join(s, sep);
}

std::string cell_text(const std::vector<Entry>& values) { return join_values(values, " or "); }

AssertedValue::Kind kind_from(const std::string& s) {
  if (s == "exact") return AssertedValue::Kind::Exact;
  if (s == "interval") return AssertedValue::Kind::Interval;
  if (s == "unknown") return AssertedValue::Kind::Unknown;
  throw std::invalid_argument("unknown asserted kind '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  if (s == "same") return Verdict::Same;
  if (s == "mirror") return Verdict::Mirror;
  if (s == "distinct") return Verdict::Distinct;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

json optional_entry(const std::optional<Entry>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

void to_json(json& j, const Move& move) {
  j = json::object();
  j["kind"] = move.kind == Move::Kind::Technique ? "technique" : "rewrite";
  j["end"] = move.end == End::Front ? "front" : "back";
  j["anchor"] = move.anchor;
  j["delta"] = move.delta;
  j["rule"] = move.rule;
}

void from_json(const json& j, Move& move) {
  move.kind = j.at("kind").get<std::string>() == "technique" ? Move::Kind::Technique : Move::Kind::Rewrite;
  move.end = j.at("end").get<std::string>() == "front" ? End::Front : End::Back;
  move.anchor = j.at("anchor").get<Entry>();
  move.delta = j.at("delta").get<Entry>();
  move.rule = j.at("rule").get<std::string>();
}

void to_json(json& j, const MoveSequence& seq) {
  j = json::array();
  for (const auto& s : seq.steps) {
    json step;
    step["word"] = to_string(s.before);
    step["move"] = describe(s.move);
    step["cost"] = s.cost;
    step["after"] = to_string(s.after);
    step["detail"] = s.move;
    j.push_back(std::move(step));
  }
}

void from_json(const json& j, MoveSequence& seq) {
  seq = {};
  for (const auto& step : j) {
    MoveStep s;
    s.before = parse_word(step.at("word").get<std::string>());
    s.move = step.at("detail").get<Move>();
    s.cost = step.at("cost").get<Entry>();
    s.after = parse_word(step.at("after").get<std::string>());
    seq.total_cost += s.cost;
    seq.steps.push_back(std::move(s));
  }
}

void to_json(json& j, const AssertedValue& value) {
  j = json{{"kind", to_string(value.kind)}, {"values", value.values}, {"citation", value.citation}};
}

void from_json(const json& j, AssertedValue& value) {
  value.kind = kind_from(j.at("kind").get<std::string>());
  value.values = j.at("values").get<std::vector<Entry>>();
  value.citation = j.at("citation").get<std::string>();
}

void to_json(json& j, const DeltaBoundReport& r) {
  j = json::object();
  j["lower"] = r.lower;
  j["upper"] = optional_entry(r.upper);
  j["exact"] = r.exact;
  j["certificate"] = r.certificate ? json(*r.certificate) : json(nullptr);
  j["provenance"] = json{{"lower", r.lower_provenance}, {"upper", r.upper_provenance}};
  j["asserted"] = r.asserted ? json(*r.asserted) : json(nullptr);
  j["conflicts"] = r.conflicts;
}

void from_json(const json& j, DeltaBoundReport& r) {
  r = {};
  r.lower = j.at("lower").get<Entry>();
  if (!j.at("upper").is_null()) r.upper = j.at("upper").get<Entry>();
  r.exact = j.at("exact").get<bool>();
  if (!j.at("certificate").is_null()) r.certificate = j.at("certificate").get<MoveSequence>();
  r.lower_provenance = j.at("provenance").at("lower").get<std::vector<std::string>>();
  r.upper_provenance = j.at("provenance").at("upper").get<std::vector<std::string>>();
  if (!j.at("asserted").is_null()) r.asserted = j.at("asserted").get<AssertedValue>();
  r.conflicts = j.at("conflicts").get<std::vector<std::string>>();
}

void to_json(json& j, const FamilyMember& m) {
  j = json::object();
  j["params"] = json{{"beta", m.params.beta}, {"betas", m.params.betas}};
  j["word"] = to_string(m.word);
  j["p"] = m.pair.p;
  j["q"] = m.pair.q;
  j["name"] = m.name ? json(*m.name) : json(nullptr);
  j["a2"] = optional_entry(m.a2);
  j["chirality"] = to_string(m.chirality);
  j["trivial"] = m.trivial;
  j["link"] = m.link;
}

void from_json(const json& j, FamilyMember& m) {
  m = {};
  m.params.beta = j.at("params").at("beta").get<Entry>();
  m.params.betas = j.at("params").at("betas").get<std::vector<Entry>>();
  m.word = parse_word(j.at("word").get<std::string>());
  m.pair = {j.at("p").get<Entry>(), j.at("q").get<Entry>()};
  if (!j.at("name").is_null()) m.name = j.at("name").get<std::string>();
  if (!j.at("a2").is_null()) m.a2 = j.at("a2").get<Entry>();
  m.chirality = verdict_from(j.at("chirality").get<std::string>());
  m.trivial = j.at("trivial").get<bool>();
  m.link = j.at("link").get<bool>();
}

void to_json(json& j, const KnotIdentity& k) {
  j = json::object();
  j["name"] = k.name;
  j["word"] = k.source_word ? json(to_string(*k.source_word)) : json(nullptr);
  if (k.fraction) {
    const auto orbit = q_orbit(*k.fraction);
    const auto mirror_orbit = q_orbit(mirror_pair(*k.fraction));
    j["p"] = k.fraction->p;
    j["q_orbit"] = std::vector<Entry>(orbit.begin(), orbit.end());
    j["mirror_q_orbit"] = std::vector<Entry>(mirror_orbit.begin(), mirror_orbit.end());
  } else {
    j["p"] = nullptr;
    j["q_orbit"] = nullptr;
    j["mirror_q_orbit"] = nullptr;
  }
  j["asserted_u_delta"] = k.asserted_u_delta;
  j["groups"] = k.groups;
}

void to_json(json& j, const Table1Report& report) {
  j = json::object();
  j["pass"] = report.pass;
  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    json r{{"name", row.name}, {"normal_form", to_string(row.normal_form)}, {"pass", row.pass}};
    r["examples"] = json::array();
    for (std::size_t i = 0; i < row.examples.size(); ++i) {
      r["examples"].push_back(json{{"word", to_string(row.examples[i])}, {"verdict", to_string(row.verdicts[i])}});
    }
    j["rows"].push_back(std::move(r));
  }
}

void to_json(json& j, const Table2Report& report) {
  j = json::object();
  j["pass"] = report.pass;
  j["names"] = report.names;
  std::vector<std::string> words;
  for (const auto& w : report.words) words.push_back(to_string(w));
  j["words"] = words;
  j["cells"] = json::array();
  for (const auto& c : report.cells) {
    j["cells"].push_back(json{{"row", c.row},
                              {"column", c.column},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"pass", c.pass}});
  }
}

Identification identify(const ConwayWord& word) {
  Identification id;
  id.word = word;
  id.pair = evaluate_fraction(word);
  id.knot = id.pair.is_knot();
  if (id.pair.p >= 1) id.amphichiral = is_amphichiral(id.pair);
  if (id.knot) {
    id.a2 = id.pair.is_unknot() ? 0 : a2_skein(word).value;
    const CatalogMatch m = catalog_lookup(id.pair);
    if (m.status == CatalogMatch::Status::Found) {
      id.name = m.identity->name;
      id.chirality = m.chirality;
    } else if (id.pair.is_unknot()) {
      id.name = "0_1";
      id.chirality = Verdict::Same;
    }
  }
  return id;
}

void to_json(json& j, const Identification& id) {
  const auto orbit = q_orbit(id.pair);
  j = json::object();
  j["word"] = to_string(id.word);
  j["p"] = id.pair.p;
  j["q"] = id.pair.q;
  j["q_orbit"] = std::vector<Entry>(orbit.begin(), orbit.end());
  j["type"] = id.knot ? "knot" : "link";
  j["name"] = id.name ? json(*id.name) : json(nullptr);
  j["chirality"] = id.name ? json(to_string(id.chirality)) : json(nullptr);
  j["amphichiral"] = id.amphichiral;
  j["a2"] = optional_entry(id.a2);
}

std::string emit(const Identification& id, Format format) {
  const json j = id;
  if (format == Format::Json) return j.dump(2) + "\n";
  const auto orbit = q_orbit(id.pair);
  const std::string orbit_text = "{" + std::to_string(orbit[0]) + "," + std::to_string(orbit[1]) + "}";
  const std::string name = id.name ? *id.name : "";
  const std::string chirality = id.name ? to_string(id.chirality) : "";
  const std::string a2 = id.a2 ? std::to_string(*id.a2) : "";
  if (format == Format::Csv) {
    return "word,p,q,q_orbit,type,name,chirality,amphichiral,a2\n" + csv_field(to_string(id.word)) + "," +
           std::to_string(id.pair.p) + "," + std::to_string(id.pair.q) + "," + csv_field(orbit_text) + "," +
           (id.knot ? "knot" : "link") + "," + name + "," + chirality + "," + (id.amphichiral ? "true" : "false") +
           "," + a2 + "\n";
  }
  std::ostringstream out;
  out << "word:        " << to_string(id.word) << "\n";
  out << "class:       S(" << id.pair.p << "," << id.pair.q << "), q-orbit " << orbit_text << "\n";
  out << "type:        " << (id.knot ? "knot" : "2-component link") << "\n";
  if (id.knot) {
    out << "catalog:     " << (id.name ? *id.name + " (" + chirality + ")" : "not in catalog") << "\n";
  }
  out << "amphichiral: " << (id.amphichiral ? "yes" : "no") << "\n";
  if (id.a2) out << "a2:          " << *id.a2 << "\n";
  return out.str();
}

std::string emit_a2(const ConwayWord& word, Entry a2, Format format) {
  if (format == Format::Json) return json{{"word", to_string(word)}, {"a2", a2}}.dump(2) + "\n";
  if (format == Format::Csv) return "word,a2\n" + csv_field(to_string(word)) + "," + std::to_string(a2) + "\n";
  return std::to_string(a2) + "\n";
}

std::string emit(const DeltaBoundReport& r, std::string_view subject, Format format) {
  if (format == Format::Json) {
    json j = r;
    return j.dump(2) + "\n";
  }
  const std::string upper = r.upper ? std::to_string(*r.upper) : "";
  if (format == Format::Csv) {
    return "subject,lower,upper,exact,lower_provenance,upper_provenance,certificate_cost\n" +
           csv_field(subject) + "," + std::to_string(r.lower) + "," + upper + "," + (r.exact ? "true" : "false") +
           "," + csv_field(join(r.lower_provenance, ";")) + "," + csv_field(join(r.upper_provenance, ";")) + "," +
           (r.certificate ? std::to_string(r.certificate->total_cost) : "") + "\n";
  }
  std::ostringstream out;
  out << subject << "\n";
  if (r.exact) {
    out << "  value: " << r.lower << " (exact)\n";
  } else {
    out << "  value: between " << r.lower << " and " << (r.upper ? upper : "?") << "\n";
  }
  out << "  lower: " << r.lower << " [" << join(r.lower_provenance, ", ") << "]\n";
  out << "  upper: " << (r.upper ? upper : "none") << " [" << join(r.upper_provenance, ", ") << "]\n";
  if (r.asserted) {
    out << "  asserted: " << to_string(r.asserted->kind) << " " << cell_text(r.asserted->values) << " ("
        << r.asserted->citation << ")\n";
  }
  for (const auto& c : r.conflicts) out << "  CONFLICT: " << c << "\n";
  if (r.certificate) {
    out << "  certificate (cost " << r.certificate->total_cost << "):\n";
    for (const auto& s : r.certificate->steps) {
      out << "    " << to_string(s.before) << " --" << describe(s.move) << " [" << s.cost << "]--> "
          << to_string(s.after) << "\n";
    }
  }
  return out.str();
}

std::string emit(const Table1Report& report, Format format) {
  if (format == Format::Json) {
    json j = report;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "name,normal_form,example,verdict,pass\n";
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.examples.size(); ++i) {
        out << row.name << "," << csv_field(to_string(row.normal_form)) << ","
            << csv_field(to_string(row.examples[i])) << "," << to_string(row.verdicts[i]) << ","
            << (row.verdicts[i] != Verdict::Distinct ? "true" : "false") << "\n";
      }
    }
    return out.str();
  }
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-18s %-28s %s\n", "K", "normal form", "example", "verdict");
  out << line;
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.examples.size(); ++i) {
      std::snprintf(line, sizeof line, "%-6s %-18s %-28s %s\n", i == 0 ? row.name.c_str() : "",
                    i == 0 ? to_string(row.normal_form).c_str() : "", to_string(row.examples[i]).c_str(),
                    to_string(row.verdicts[i]).c_str());
      out << line;
    }
  }
  out << (report.pass ? "all rows pass\n" : "MISMATCH\n");
  return out.str();
}

std::string emit(const Table2Report& report, Format format) {
  if (format == Format::Json) {
    json j = report;
    return j.dump(2) + "\n";
  }
  const std::size_t n = report.names.size();
  std::vector<std::vector<std::string>> grid(n, std::vector<std::string>(n));
  std::vector<std::string> failures;
  for (const auto& c : report.cells) {
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (report.names[k] == c.row) i = k;
      if (report.names[k] == c.column) j = k;
    }
    grid[i][j] = cell_text(c.computed);
    if (!c.pass) failures.push_back(c.row + " x " + c.column + ": expected " + cell_text(c.expected));
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "K";
    for (const auto& name : report.names) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << report.names[i];
      for (std::size_t j = 0; j < n; ++j) out << "," << csv_field(grid[i][j]);
      out << "\n";
    }
    return out.str();
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-6s %-8s", "K", "");
  out << buf;
  for (const auto& name : report.names) {
    std::snprintf(buf, sizeof buf, " %-7s", name.c_str());
    out << buf;
  }
  out << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%-6s %-8s", report.names[i].c_str(), to_string(report.words[i]).c_str());
    out << buf;
    for (std::size_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, " %-7s", grid[i][j].c_str());
      out << buf;
    }
    out << "\n";
  }
  for (const auto& f : failures) out << "MISMATCH " << f << "\n";
  if (failures.empty()) out << "all cells match\n";
  return out.str();
}

std::string emit(const FamilyScan& scan, Format format) {
  std::ostringstream out;
  if (format == Format::Json) {
    for (const auto& m : scan.members) out << json(m).dump() << "\n";
    if (scan.truncated) out << json{{"truncated", true}}.dump() << "\n";
    return out.str();
  }
  if (format == Format::Csv) {
    out << "beta,betas,word,p,q,name,a2,chirality,trivial,link\n";
    for (const auto& m : scan.members) {
      out << m.params.beta << "," << csv_field(join_values(m.params.betas, ";")) << "," << csv_field(to_string(m.word))
          << "," << m.pair.p << "," << m.pair.q << "," << (m.name ? *m.name : "") << ","
          << (m.a2 ? std::to_string(*m.a2) : "") << "," << (m.name ? to_string(m.chirality) : "") << ","
          << (m.trivial ? "true" : "false") << "," << (m.link ? "true" : "false") << "\n";
    }
    if (scan.truncated) out << "# truncated\n";
    return out.str();
  }
  std::size_t nontrivial = 0;
  for (const auto& m : scan.members) {
    std::string status = m.link ? "link" : m.trivial ? "trivial" : "a2=" + std::to_string(*m.a2);
    if (m.name) status += "  " + *m.name + " (" + to_string(m.chirality) + ")";
    if (m.a2) ++nontrivial;
    out << to_string(m.params) << "  " << to_string(m.word) << "  S(" << m.pair.p << "," << m.pair.q << ")  "
        << status << "\n";
  }
  out << scan.members.size() << " members, " << nontrivial << " nontrivial knots, all with |a2| = 1\n";
  if (scan.truncated) out << "TRUNCATED at the member limit\n";
  return out.str();
}

std::string emit_catalog(Format format) {
  if (format == Format::Json) {
    json j = json::array();
    for (const auto& k : catalog()) j.push_back(k);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "name,word,p,q_orbit,asserted_kind,asserted_values,citation\n";
    for (const auto& k : catalog()) {
      std::string orbit;
      if (k.fraction) {
        const auto o = q_orbit(*k.fraction);
        orbit = std::to_string(o[0]) + ";" + std::to_string(o[1]);
      }
      out << k.name << "," << csv_field(k.source_word ? to_string(*k.source_word) : "") << ","
          << (k.fraction ? std::to_string(k.fraction->p) : "") << "," << orbit << ","
          << to_string(k.asserted_u_delta.kind) << "," << csv_field(join_values(k.asserted_u_delta.values, ";"))
          << "," << csv_field(k.asserted_u_delta.citation) << "\n";
    }
    return out.str();
  }
  char line[256];
  for (const auto& k : catalog()) {
    const std::string word = k.source_word ? to_string(*k.source_word) : "-";
    const std::string p = k.fraction ? "S(" + std::to_string(k.fraction->p) + "," + std::to_string(k.fraction->q) + ")" : "-";
    const std::string value = k.asserted_u_delta.kind == AssertedValue::Kind::Unknown
                                  ? "unknown"
                                  : cell_text(k.asserted_u_delta.values);
    std::snprintf(line, sizeof line, "%-6s %-18s %-10s u^Delta %s\n", k.name.c_str(), word.c_str(), p.c_str(),
                  value.c_str());
    out << line;
  }
  return out.str();
}

}  // namespace dk
