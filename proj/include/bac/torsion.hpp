#pragma once

#include <cstddef>
#include <vector>

#include "bac/binary.hpp"

namespace bac {

// Torsion of a based acyclic complex computed from a chosen factorisation:
// M_n = [J_n | s_n] (image basis of im d_{n+1} followed by the section
// columns over the image basis of im d_n), torsion = prod det(M_n)^(-1)^n.
// The value does not depend on the choice of bases and sections.
inline Scalar chain_torsion_with(const ChainComplex& c, const Factorization& f) {
  const FieldDesc& fd = c.field();
  std::size_t k = c.length();
  Scalar t = Scalar::one(fd);
  for (std::size_t n = 0; n <= k; ++n) {
    std::vector<Matrix> parts;
    if (n < k) parts.push_back(f.image_basis[n]);
    if (n >= 1) parts.push_back(f.section[n - 1]);
    Matrix m = hstack(parts, fd, c.dim(n));
    if (!m.is_square()) throw NotAcyclic("torsion: basis matrix not square");
    Scalar d = det(m);
    if (d.is_zero()) throw NotAcyclic("torsion: degenerate basis matrix");
    t *= n % 2 == 0 ? d : d.inverse();
  }
  return t;
}

inline Scalar chain_torsion(const ChainComplex& c) { return chain_torsion_with(c, factorize(c)); }

// The concrete K_1(F) = F^x class of a binary complex: torsion of the top
// complex divided by torsion of the bottom, both over the standard bases.
inline Scalar binary_torsion(const BinaryComplex& p) {
  return chain_torsion(p.top_complex()) / chain_torsion(p.bottom_complex());
}

// Multiplicative evaluation of a formal sum: prod t(complex)^coefficient.
inline Scalar eval_torsion(const RelationExpr& e) {
  Scalar t = Scalar::one(e.field);
  for (const auto& [coeff, c] : e.terms) t *= binary_torsion(c).pow(coeff);
  return t;
}

}  // namespace bac
