#include "skein/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skein/errors.hpp"
#include "skein/seifert.hpp"

namespace skein {

namespace {

// RFC-4180-ish CSV: fields with commas or quotes are double-quoted.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  size_t i = 0;
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row.size() > 1 || !row[0].empty()) rows.push_back(row);
    row.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
    }
    ++i;
  }
  if (quoted) throw SchemaError("corpus CSV: unterminated quote");
  if (!field.empty() || !row.empty()) end_row();
  return rows;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::optional<bool> parse_flag(const std::string& s, const std::string& where) {
  if (s.empty()) return std::nullopt;
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw SchemaError("corpus: bad boolean \"" + s + "\" in " + where);
}

std::optional<int> parse_opt_int(const std::string& s, const std::string& where) {
  if (s.empty()) return std::nullopt;
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError("corpus: bad integer \"" + s + "\" in " + where);
  }
}

const std::vector<std::string> kColumns = {
    "name",  "pd",   "alternating", "positive_diagram", "homogeneous",
    "chi",   "chi4", "sigma",       "homfly_ref",       "split_components",
    "source"};

}  // namespace

void validate_record(KnotRecord& r) {
  try {
    r.diagram = LinkDiagram::parse_pd(r.pd).with_name(r.name);
  } catch (const Error& e) {
    throw SchemaError("corpus record \"" + r.name + "\": " + e.what());
  }
  bool alternating = r.diagram.is_alternating();
  bool positive = true;
  for (const Crossing& c : r.diagram.crossings())
    if (c.sign < 0) positive = false;
  bool homogeneous = analyze(SignedGraph::from_diagram(r.diagram)).homogeneous;

  auto check_flag = [&](const std::optional<bool>& stored, bool computed,
                        const char* what) {
    if (stored && *stored != computed)
      throw CorpusInconsistency("record \"" + r.name + "\": declared " + what +
                                "=" + (*stored ? "true" : "false") +
                                " but computed " + (computed ? "true" : "false"));
  };
  check_flag(r.alternating, alternating, "alternating");
  check_flag(r.positive_diagram, positive, "positive_diagram");
  check_flag(r.homogeneous, homogeneous, "homogeneous");

  if (r.chi && r.chi4 && *r.chi4 < *r.chi)
    throw CorpusInconsistency("record \"" + r.name +
                              "\": chi4 < chi is impossible");
  if (r.split_components < 1)
    throw SchemaError("record \"" + r.name + "\": split_components must be >= 1");
}

std::vector<KnotRecord> parse_corpus_csv(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw SchemaError("corpus CSV: empty file");
  if (rows[0] != kColumns) {
    std::ostringstream os;
    os << "corpus CSV: header must be";
    for (const auto& c : kColumns) os << " " << c;
    throw SchemaError(os.str());
  }
  std::vector<KnotRecord> records;
  for (size_t i = 1; i < rows.size(); ++i) {
    auto& row = rows[i];
    if (row.size() != kColumns.size())
      throw SchemaError("corpus CSV: row " + std::to_string(i + 1) + " has " +
                        std::to_string(row.size()) + " fields");
    KnotRecord r;
    r.name = row[0];
    r.pd = row[1];
    std::string where = "record \"" + r.name + "\"";
    r.alternating = parse_flag(row[2], where);
    r.positive_diagram = parse_flag(row[3], where);
    r.homogeneous = parse_flag(row[4], where);
    r.chi = parse_opt_int(row[5], where);
    r.chi4 = parse_opt_int(row[6], where);
    r.sigma = parse_opt_int(row[7], where);
    if (!row[8].empty()) r.homfly_ref = row[8];
    r.split_components = parse_opt_int(row[9], where).value_or(1);
    r.source = row[10];
    validate_record(r);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<KnotRecord> parse_corpus_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("corpus JSON: ") + e.what());
  }
  if (!j.is_array()) throw SchemaError("corpus JSON: expected an array");
  std::vector<KnotRecord> records;
  for (const auto& e : j) {
    KnotRecord r;
    if (!e.contains("name") || !e.contains("pd"))
      throw SchemaError("corpus JSON: record needs name and pd");
    r.name = e["name"].get<std::string>();
    r.pd = e["pd"].get<std::string>();
    auto get_bool = [&](const char* k) -> std::optional<bool> {
      if (!e.contains(k) || e[k].is_null()) return std::nullopt;
      return e[k].get<bool>();
    };
    auto get_int = [&](const char* k) -> std::optional<int> {
      if (!e.contains(k) || e[k].is_null()) return std::nullopt;
      return e[k].get<int>();
    };
    r.alternating = get_bool("alternating");
    r.positive_diagram = get_bool("positive_diagram");
    r.homogeneous = get_bool("homogeneous");
    r.chi = get_int("chi");
    r.chi4 = get_int("chi4");
    r.sigma = get_int("sigma");
    if (e.contains("homfly_ref") && !e["homfly_ref"].is_null())
      r.homfly_ref = e["homfly_ref"].get<std::string>();
    r.split_components = get_int("split_components").value_or(1);
    if (e.contains("source") && !e["source"].is_null())
      r.source = e["source"].get<std::string>();
    validate_record(r);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<KnotRecord> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("corpus: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return parse_corpus_json(buf.str());
  return parse_corpus_csv(buf.str());
}

std::string corpus_to_csv(const std::vector<KnotRecord>& records) {
  std::ostringstream os;
  for (size_t i = 0; i < kColumns.size(); ++i)
    os << (i ? "," : "") << kColumns[i];
  os << "\n";
  auto flag = [](const std::optional<bool>& b) {
    return !b ? std::string{} : (*b ? std::string("true") : std::string("false"));
  };
  auto num = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string{};
  };
  for (const KnotRecord& r : records) {
    os << csv_quote(r.name) << "," << csv_quote(r.pd) << ","
       << flag(r.alternating) << "," << flag(r.positive_diagram) << ","
       << flag(r.homogeneous) << "," << num(r.chi) << "," << num(r.chi4) << ","
       << num(r.sigma) << "," << csv_quote(r.homfly_ref.value_or("")) << ","
       << r.split_components << "," << csv_quote(r.source) << "\n";
  }
  return os.str();
}

std::string corpus_to_json(const std::vector<KnotRecord>& records) {
  nlohmann::json j = nlohmann::json::array();
  for (const KnotRecord& r : records) {
    nlohmann::json e;
    e["name"] = r.name;
    e["pd"] = r.pd;
    auto put_bool = [&](const char* k, const std::optional<bool>& v) {
      e[k] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    auto put_int = [&](const char* k, const std::optional<int>& v) {
      e[k] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    put_bool("alternating", r.alternating);
    put_bool("positive_diagram", r.positive_diagram);
    put_bool("homogeneous", r.homogeneous);
    put_int("chi", r.chi);
    put_int("chi4", r.chi4);
    put_int("sigma", r.sigma);
    e["homfly_ref"] =
        r.homfly_ref ? nlohmann::json(*r.homfly_ref) : nlohmann::json(nullptr);
    e["split_components"] = r.split_components;
    e["source"] = r.source;
    j.push_back(e);
  }
  return j.dump(2);
}

std::string default_corpus_path() {
  if (const char* env = std::getenv("SKEINKIT_CORPUS")) return env;
#ifdef SKEINKIT_BUNDLED_CORPUS
  return SKEINKIT_BUNDLED_CORPUS;
#else
  return "corpus_default.csv";
#endif
}

}  // namespace skein
