#pragma once

#include <map>
#include <memory>
#include <string>

#include "shiftforge/construct.hpp"

namespace shiftforge {

// A spec document names groups (oracles, presentations, weight maps), graphs,
// block surfaces, Schreier surfaces, embedding systems, and stored queries.
// All cross references resolve at parse time; unknown kind tags are rejected
// before any evaluation.
class SpecDocument {
 public:
  static SpecDocument parse_text(const std::string& json_text);
  static SpecDocument load_file(const std::string& path);

  std::string serialize() const;  // canonical JSON, reparses to the same document

  struct SystemEntry {
    std::string kind;
    SubgroupHandle handle;
    std::shared_ptr<PushSystem> push;  // explicit-push systems
  };

  struct Query {
    std::string kind;  // word-list | probe | certificate
    std::string system;
    std::vector<std::string> words;
    std::string claim;
    int radius = 0;
    std::string surface;
    std::string letter;
    int m = 0;
    int n = 0;
  };

  const GroupOracle& oracle(const std::string& name) const;
  const Presentation& presentation(const std::string& name) const;
  const WeightMap& weight_map(const std::string& name) const;
  std::shared_ptr<GraphSpec> graph(const std::string& name) const;
  const PiSpec& pi(const std::string& name) const;
  const SchreierSurfaceSpec& surface(const std::string& name) const;
  const SystemEntry& system(const std::string& name) const;
  const Query& query(const std::string& name) const;

  std::vector<std::string> system_names() const;

  // Command bodies shared by the C API and the command-line tool.
  std::string eval_word(const std::string& system_name, const std::string& word_text,
                        int window) const;
  ProbeReport probe(const std::string& system_name, const std::string& claim_name,
                    int radius, int window) const;
  std::string render(const std::string& target, const std::string& name,
                     const std::string& word_text, int window) const;
  std::string classify_surface(const std::string& surface_name) const;
  std::string certificate(const std::string& surface_name, const std::string& letter,
                          int m, int n) const;
  std::string run_query(const std::string& query_name, int window) const;

 private:
  SpecDocument() = default;

  std::string raw_json_;  // normalized source, basis for serialize()

  std::map<std::string, GroupOracle> oracles_;
  std::map<std::string, Presentation> presentations_;
  std::map<std::string, WeightMap> weight_maps_;
  std::map<std::string, std::shared_ptr<GraphSpec>> graphs_;
  std::map<std::string, PiSpec> pis_;
  std::map<std::string, SchreierSurfaceSpec> surfaces_;
  std::map<std::string, SystemEntry> systems_;
  std::map<std::string, Query> queries_;

  friend struct SpecDocumentBuilder;
};

int probe_radius_cap();  // SHIFTFORGE_MAX_RADIUS, default 8

}  // namespace shiftforge
