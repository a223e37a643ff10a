#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Kodaira types handled by the height machinery. Only I_n occurs in the
// bundled K3 configurations; the additive types carry the fixed correction
// terms of the height formula.
enum class FiberKind { In, InStar, IV, IVStar, IIIStar };

struct FiberType {
  FiberKind kind;
  int n = 0;  // the n of I_n / I*_n

  int components() const;
  int euler() const;
  static FiberType parse(const std::string& s);  // "I4", "I*0", "IV", "IV*", "III*"
  std::string str() const;
};

struct Fiber {
  int label;
  FiberType type;
};

struct FiberConfiguration {
  std::vector<Fiber> fibers;

  int euler_sum() const;
  std::vector<Fiber> reducible() const;  // fibers with >= 2 components
  const Fiber& by_label(int label) const;
};

// a section given by its intersection data; meets maps a reducible fiber label
// to the component index it passes through (C_0 if absent)
struct SectionData {
  std::string name;
  int order = 1;
  std::map<int, int> meets;
  std::optional<int> meets_zero;  // P.s; derived from the height relation when absent
};

// contribution terms of the height formula
Rat contribution(const FiberType& t, int i);
Rat contribution(const FiberType& t, int i, int j);

int picard_rank(const FiberConfiguration& config, int mw_rank);

// trivial lattice in the basis F, s, C_i^(j) (i >= 1); F.F = 0, F.s = 1, s.s = -2,
// so the first block is isometric to U
struct TrivialLattice {
  Lattice lattice;
  FiberConfiguration config;
  // basis bookkeeping: entry (fiber label, component index), or F/s sentinels
  struct BasisEntry {
    enum Kind { F, S, Comp } kind;
    int fiber = 0;
    int comp = 0;
  };
  std::vector<BasisEntry> basis;

  std::size_t rank() const { return lattice.rank(); }
};

TrivialLattice trivial_lattice(const FiberConfiguration& config);

Rat height_pairing(const SectionData& p, const SectionData& q, const FiberConfiguration& config,
                   int chi, const Rat& pq = Rat(0));
Rat height_self(const SectionData& p, const FiberConfiguration& config, int chi);

// P.s forced by <P,P> = 0 for a torsion section; throws DataError if not a
// nonnegative integer
int derive_meets_zero(const SectionData& p, const FiberConfiguration& config, int chi = 2);

// the unique v in Tr (x) Q with v.F = 1, v.s = P.s, v.C matching P.meets;
// postconditions v.v = -2 and order*v integral are enforced
std::vector<Rat> torsion_section_class(const SectionData& p, const TrivialLattice& tr);

// a formal Z-combination of the generator torsion sections
using MwWord = std::map<std::string, int>;

struct NsLattice {
  Lattice lattice;                     // the Neron-Severi gram in the extracted basis
  TrivialLattice tr;
  RatMat basis;                        // NS basis rows in Tr coordinates
  Int index;                           // [NS : Tr]
  std::vector<SectionData> sections;   // the generator sections
  // per-basis-vector semantic info for isometry construction
  struct BasisEntry {
    enum Kind { F, S, Comp, Section } kind;
    int fiber = 0, comp = 0;
    MwWord word;  // for sections
    std::string label;
  };
  std::vector<BasisEntry> basis_info;

  std::size_t rank() const { return lattice.rank(); }
  const SectionData& section(const std::string& name) const;

  // intersection pattern and class of an arbitrary MW word (group law: component
  // indices add mod n on I_n fibers)
  SectionData mw_section(const MwWord& w) const;
  std::vector<Rat> mw_class_in_tr(const MwWord& w) const;

  // convert a rational row in Tr coordinates to NS coordinates
  std::vector<Rat> tr_to_ns(const std::vector<Rat>& v) const;
};

NsLattice build_ns(const FiberConfiguration& config, const std::vector<SectionData>& sections,
                   int chi = 2);

struct LatticeIsometry {
  IntMat matrix;  // rows = images of basis vectors; matrix * gram * matrix^T = gram
  int order = 1;
  std::string name;
};

// checks the isometry condition and computes the exact order (throws if unbounded)
LatticeIsometry make_isometry(const Lattice& l, IntMat m, const std::string& name,
                              int max_order = 64);

// translation by a torsion section t: F fixed, components shifted by t's meet
// index per fiber, sections r -> r + t
LatticeIsometry translation_isometry(const MwWord& t, const NsLattice& ns);

// an involution entered as data: a component relabeling plus section images,
// fixing F and s; validated by the isometry and order-2 checks
struct InvolutionSpec {
  std::string name;
  std::map<std::pair<int, int>, std::pair<int, int>> components;  // (fiber,comp) -> (fiber,comp)
  std::map<std::string, MwWord> sections;
};

LatticeIsometry base_involution_isometry(const InvolutionSpec& spec, const NsLattice& ns);

}  // namespace k3lat
