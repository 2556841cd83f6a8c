#pragma once

// Mitosis chains from the vertex 0, the hypothesis checker for the Demazure
// step, face characters, and the catalog of Schubert face unions for Sp_4.

#include <map>
#include <string>
#include <vector>

#include "mitosis/instances.hpp"
#include "mitosis/parapolytope.hpp"
#include "mitosis/weyl.hpp"

namespace mitosis {

/// e^{w_0 lambda} * sum of e^{p(x)} over the lattice points of u.
CharacterElement face_character(const Parapolytope& p, const UnionOfFaces& u, const Weight& lambda,
                                const RootDatum& rd);
CharacterElement face_character(const Parapolytope& p, const std::vector<Face>& faces,
                                const Weight& lambda, const RootDatum& rd);

struct HypothesisReport {
  bool contains_zero = true;    // (1)
  bool l_class_closed = true;   // (2), including L_i-reducedness
  bool empty_covered = true;    // (3)
  bool projection_equal = true; // (4)
  std::string witness;          // first failure, human readable

  bool all() const { return contains_zero && l_class_closed && empty_covered && projection_equal; }
};

HypothesisReport check_theorem_hypotheses(const Parapolytope& p, int i, const std::vector<Face>& s);
/// M_i applied to every face of s; duplicates removed.
std::vector<Face> mitosis_of_set(const Parapolytope& p, int i, const std::vector<Face>& s);
/// D_i(face_character(s)) == face_character(M_i(s)).
bool verify_demazure_step(const Parapolytope& p, const Weight& lambda, const RootDatum& rd, int i,
                          const std::vector<Face>& s);

struct ChainStep {
  int i = 0;
  std::vector<Face> faces;  // collection after applying M_i
  HypothesisReport report;  // hypotheses for the collection M_i was applied to
  bool demazure_ok = true;
};

struct MitosisChainResult {
  std::vector<int> word;  // reduced word of w_0 w w_0^{-1}, a subword of the ambient word
  std::vector<Face> start;
  std::vector<ChainStep> steps;  // in order of application (last letter first)
  UnionOfFaces sigma;

  bool hypotheses_hold() const;
};

/// Applies M_{j_l}, ..., M_{j_1} to {0}. With check set, every step records the
/// hypothesis report and the Demazure step identity.
MitosisChainResult mitosis_chain(const Parapolytope& p, const Weight& lambda, const RootDatum& rd,
                                 const WeylElement& w, bool check = true);
MitosisChainResult mitosis_chain_for_word(const Parapolytope& p, const Weight& lambda,
                                          const RootDatum& rd, const std::vector<int>& word,
                                          bool check = true);

// -- Sp_4 catalog ------------------------------------------------------------------

/// Each entry is a union of intersections of the named facets; keys are the
/// canonical reduced words.
using Sp4Catalog = std::map<std::vector<int>, std::vector<std::vector<Sp4Facet>>>;
const Sp4Catalog& sp4_catalog();
UnionOfFaces catalog_union(const Parapolytope& sp, const std::vector<std::vector<Sp4Facet>>& entry);
UnionOfFaces sp4_delta(const Parapolytope& sp, const WeylElement& w);

/// Intersection of two face unions, as a face union.
UnionOfFaces intersect(const HPolytope& p, const UnionOfFaces& a, const UnionOfFaces& b);
UnionOfFaces unite(const UnionOfFaces& a, const UnionOfFaces& b);

/// Delta_{s1s2s1} meet Delta_{s2s1s2} equals Delta_{s1s2} union Delta_{s2s1}.
bool sp4_intersection_identity(const SpddoSpec& spec, const Sp4Catalog& catalog = sp4_catalog());

/// Polytope-ring relations between facet classes, kept as text.
const std::vector<std::string>& sp4_facet_relations();

std::string facet_name(Sp4Facet f);

}  // namespace mitosis
