#pragma once

#include "eef/model.hpp"

namespace eef {

// Pairwise interaction model on {+,-}^4 with interactions along the cycle
// D-C, C-B, B-A, A-D. Rows I, D, C, B, A, BA, CB, DC, DA; 16 states labeled
// by sign patterns (D, C, B, A), '+' before '-'.
ModelMatrix four_cycle_model();

// Binary Markov chain with `steps` transitions. States are the 2^(steps+1)
// trajectories in lexicographic order; rows are 1-X0, X0 and the four
// transition counts N00, N01, N10, N11.
ModelMatrix markov_chain_model(int steps);

}  // namespace eef
