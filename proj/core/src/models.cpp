#include "eef/models.hpp"

#include <array>

namespace eef {

ModelMatrix four_cycle_model() {
  // Four +/-1 spins D, C, B, A on a cycle, interactions BA, CB, DC, DA.
  // States enumerate sign patterns with '+' ahead of '-' in each position.
  ModelMatrix m;
  const int n = 16;
  m.states.labels.reserve(n);
  m.states.mu.assign(n, Int(1));
  std::vector<std::array<int, 4>> spin(n);  // (D, C, B, A)
  for (int i = 0; i < n; ++i) {
    std::string label;
    for (int k = 0; k < 4; ++k) {
      int bit = (i >> (3 - k)) & 1;
      spin[i][k] = bit ? -1 : 1;
      label += bit ? '-' : '+';
    }
    m.states.labels.push_back(label);
  }
  m.row_names = {"I", "D", "C", "B", "A", "BA", "CB", "DC", "DA"};
  m.a = IntMatrix(9, n);
  for (int x = 0; x < n; ++x) {
    int D = spin[x][0], C = spin[x][1], B = spin[x][2], A = spin[x][3];
    m.a.at(0, x) = 1;
    m.a.at(1, x) = D;
    m.a.at(2, x) = C;
    m.a.at(3, x) = B;
    m.a.at(4, x) = A;
    m.a.at(5, x) = B * A;
    m.a.at(6, x) = C * B;
    m.a.at(7, x) = D * C;
    m.a.at(8, x) = D * A;
  }
  m.validate();
  return m;
}

ModelMatrix markov_chain_model(int steps) {
  if (steps < 1 || steps > 12)
    throw math_error("markov_chain_model: steps must be between 1 and 12");
  ModelMatrix m;
  const int len = steps + 1;
  const int n = 1 << len;
  m.states.labels.reserve(n);
  m.states.mu.assign(n, Int(1));
  m.row_names = {"1-X0", "X0", "N00", "N01", "N10", "N11"};
  m.a = IntMatrix(6, n);
  for (int x = 0; x < n; ++x) {
    // Trajectory bits, x0 in the most significant position.
    std::string label;
    std::vector<int> bit(len);
    for (int t = 0; t < len; ++t) {
      bit[t] = (x >> (len - 1 - t)) & 1;
      label += char('0' + bit[t]);
    }
    m.states.labels.push_back(label);
    int counts[2][2] = {{0, 0}, {0, 0}};
    for (int t = 1; t < len; ++t) ++counts[bit[t - 1]][bit[t]];
    m.a.at(0, x) = 1 - bit[0];
    m.a.at(1, x) = bit[0];
    m.a.at(2, x) = counts[0][0];
    m.a.at(3, x) = counts[0][1];
    m.a.at(4, x) = counts[1][0];
    m.a.at(5, x) = counts[1][1];
  }
  m.validate();
  return m;
}

}  // namespace eef
