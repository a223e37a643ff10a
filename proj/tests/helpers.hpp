#pragma once

#include <map>
#include <string>

#include "k3lat/paperdata.hpp"

namespace k3lat::testing {

inline std::string data_path() { return k3lat::data_dir(); }

struct GroupPipeline {
  FibrationDocument doc;
  NsLattice ns;
  GroupAction action;
  Lattice omega;
  Sublattice omega_sub;
  Sublattice invariant_sub;
};

// build (and cache) the full pipeline for one of the fourteen groups
inline const GroupPipeline& pipeline(const std::string& group) {
  static std::map<std::string, GroupPipeline> cache;
  auto it = cache.find(group);
  if (it != cache.end()) return it->second;
  GroupPipeline p;
  const GroupRealization& real = group_realization(group);
  p.doc = load_fibration(data_path() + "/fibrations/" + real.fibration + ".json");
  p.ns = build_ns_from_document(p.doc);
  p.action = action_on_ns(p.ns, p.doc, real, group);
  p.action.lattice = &p.ns.lattice;
  p.invariant_sub = invariant_sublattice(p.action);
  p.omega_sub = orthogonal_complement(p.invariant_sub);
  p.omega = Lattice(p.omega_sub.induced_gram());
  auto [ins, ok] = cache.emplace(group, std::move(p));
  // re-point the action at the cached lattice object
  ins->second.action.lattice = &ins->second.ns.lattice;
  ins->second.invariant_sub.ambient = &ins->second.ns.lattice;
  ins->second.omega_sub.ambient = &ins->second.ns.lattice;
  return ins->second;
}

}  // namespace k3lat::testing
