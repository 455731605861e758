#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modloc/structure.hpp"

namespace modloc::gen {

// Disjoint directed cycles over {E/2}; cycle c occupies a contiguous block.
Structure cycles(const std::vector<int>& lengths);

// Permutation structure over {E/2}: E = {(a, perm[a])}.
Structure permutation_structure(const std::vector<int>& perm);

struct TorusSpec {
  int h = 2;
  int w = 2;
  int k = 0;
  Element element(int i, int j) const { return i * w + j; }
};

// Universe [h] x [w] indexed (i, j) -> i*w + j, signature {E1/2, E2/2}.
Structure torus(const TorusSpec& spec);
inline int twist(const TorusSpec& spec) { return spec.k; }

// Sum of the turn-path lengths for representatives reps[j] of column j,
// read off the structure by walking E1 and E2. Throws if the walk does not
// close within h steps.
int turn(const Structure& torus, int h, const std::vector<Element>& reps);

struct Hose {
  Structure structure;  // {R/1, E1/2, E2/2}
  Element a;            // (0,0)
  Element b;            // (1,0)
};
Hose hose(int h, int w);

// Signature {E/2, P<c>/1 for c in alphabet}.
Signature string_signature(std::string_view alphabet);
// Positions 0..|w|-1; alphabet defaults to "01" when it covers the word,
// else to the sorted letters of the word.
Structure string_structure(std::string_view word, std::string_view alphabet = {});
// Integer symbols 0..alphabet_size-1, predicates P0, P1, ...
Structure string_structure(const std::vector<int>& word, int alphabet_size);

std::string w_ell(int ell);  // 1^l 0^l 1^l 0^l
std::string u_ell(int ell);
std::string v_ell(int ell);

struct HanfWitness {
  std::string u;
  std::string v;
  std::vector<Element> beta;  // position of u -> position of v, 0-based
};
HanfWitness hanf_witness(int ell);

// Membership in L_left = 1+ 2 0+ 1+ 0+, L_right = 1+ 0+ 1+ 2 0+, M and L.
bool in_left(std::string_view w);
bool in_right(std::string_view w);
bool in_M(std::string_view w);
bool in_L(std::string_view w);

// ell-fold subdivision of the marked edges of a digraph on `nodes` nodes.
// Original nodes keep their indices; new nodes are appended edge by edge.
Structure subdivide(int nodes, const std::vector<std::pair<int, int>>& edges, const std::vector<bool>& marked,
                    int ell);

struct ShiftFamily {
  std::string name;
  Structure structure;
  std::vector<Element> anchors;  // a_0 .. a_{t-1}
  int radius = 0;
};

ShiftFamily reach_family(int t, int ell);
ShiftFamily cycle_family(int t, int ell);
ShiftFamily triangle_reach_family(int t, int ell);
ShiftFamily same_distance_family(int t, int ell);

}  // namespace modloc::gen
