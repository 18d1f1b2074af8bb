#ifndef SKEIN_CORPUS_HPP
#define SKEIN_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

// One corpus entry: a named diagram plus externally sourced invariants.
// Flags describe the stored diagram and must agree with what the
// library computes; loading cross-checks them.
struct KnotRecord {
  std::string name;
  std::string pd;
  std::optional<bool> alternating;
  std::optional<bool> positive_diagram;
  std::optional<bool> homogeneous;
  std::optional<int> chi;
  std::optional<int> chi4;
  std::optional<int> sigma;
  std::optional<std::string> homfly_ref;
  int split_components = 1;
  std::string source;

  LinkDiagram diagram;  // parsed and validated at load time
};

// Loads a corpus from CSV or JSON (chosen by file extension). Columns:
// name, pd, alternating, positive_diagram, homogeneous, chi, chi4,
// sigma, homfly_ref, split_components, source. Empty cells mean absent.
std::vector<KnotRecord> load_corpus(const std::string& path);

std::vector<KnotRecord> parse_corpus_csv(const std::string& text);
std::vector<KnotRecord> parse_corpus_json(const std::string& text);
std::string corpus_to_csv(const std::vector<KnotRecord>& records);
std::string corpus_to_json(const std::vector<KnotRecord>& records);

// Path of the corpus bundled with the library.
std::string default_corpus_path();

// Structural validation of one record (PD parse + flag agreement +
// chi4 >= chi). Throws SchemaError or CorpusInconsistency.
void validate_record(KnotRecord& record);

}  // namespace skein

#endif  // SKEIN_CORPUS_HPP
