#pragma once

#include <optional>
#include <string>

#include "eef/border.hpp"

namespace eef {

// Serialized outputs. JSON is deterministic: fixed key order, canonical
// rational strings, basis vectors in canonical order. Indices in JSON are
// 1-based.

std::string kernel_report_json(const ModelMatrix& m, const LatticeBasis& k,
                               const std::vector<RatVector>& confounding);
std::string kernel_report_pretty(const ModelMatrix& m, const LatticeBasis& k,
                                 const std::vector<RatVector>& confounding);

std::string basis_json(const HilbertBasisSet& basis,
                       const std::vector<std::size_t>& redundant,
                       std::optional<bool> oracle_agrees);
std::string basis_pretty(const HilbertBasisSet& basis, const StateSpace& states,
                         const std::vector<std::size_t>& redundant);

std::string faces_json(const ModelMatrix& m, const HilbertBasisSet& basis,
                       const std::vector<ExposedSet>& faces);
std::string faces_pretty(const ModelMatrix& m, const HilbertBasisSet& basis,
                         const std::vector<ExposedSet>& faces);

std::string verdict_json(const ModelMatrix& m, const ClosureVerdict& verdict);
std::string verdict_pretty(const ModelMatrix& m, const ClosureVerdict& verdict);

std::string limit_json(const ModelMatrix& m, const ExposedSet& face,
                       const LimitResult& result);
std::string limit_pretty(const ModelMatrix& m, const ExposedSet& face,
                         const LimitResult& result);

std::string density_json(const Density& d);

}  // namespace eef
