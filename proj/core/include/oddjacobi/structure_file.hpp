#pragma once

#include <optional>
#include <string>

#include "oddjacobi/structures.hpp"

namespace oddjacobi {

enum class StructureKind { none, schouten, qs, odd_jacobi, exact_qs };

const char* to_string(StructureKind kind);

/// A parsed structure definition file:
///   # comment
///   manifold x:even y:even xi:odd eta:odd
///   line t                        (optional; enables exponentials)
///   structure exact-qs            (schouten | qs | odd-jacobi | exact-qs)
///   S_hat = p(xi)*p(x) + p(eta)*p(y)
///   Q = d(xi)
///   E = xi*d(xi) + y*d(y)
/// Required fields: schouten S_hat; qs S_hat, Q; odd-jacobi S, Q;
/// exact-qs S_hat, Q, E. The structure block may be absent entirely (kind
/// `none`), leaving just the phase space.
struct StructureFile {
  PhaseSpace space;
  StructureKind kind = StructureKind::none;
  std::optional<SuperPoly> generator;  // S_hat, or S for odd-jacobi
  std::optional<VectorField> q;
  std::optional<VectorField> homothety;
};

StructureFile parse_structure_text(const std::string& text);
StructureFile load_structure_file(const std::string& path);

SchoutenStructure as_schouten(const StructureFile& file);
/// Accepts kind `schouten` too, supplying the zero field.
QSStructure as_qs(const StructureFile& file);
/// Accepts kind `schouten` too, supplying the zero field.
OddJacobiStructure as_odd_jacobi(const StructureFile& file);
ExactQSStructure as_exact_qs(const StructureFile& file);

/// Definition-file text for a structure, re-parseable by the loader.
std::string format_structure(const SchoutenStructure& st);
std::string format_structure(const OddJacobiStructure& st);

}  // namespace oddjacobi
