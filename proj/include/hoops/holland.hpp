#pragma once

// Representation of a basic algebra by monotone self-maps of a finite
// chain.  The chain Omega is the disjoint union, over the non-unit
// elements g in index order, of the right class chains of M by a fixed
// value V_g of g (the first value in bit-set order), ordered
// segment-major.  Element a acts by sending the class of x in segment g
// to the class of x*a; its residual sends the class of x to the class
// of a->x.  Maps act on the right and compose diagrammatically: the
// left factor applies first.

#include <string>
#include <vector>

#include "hoops/filters.hpp"
#include "hoops/finite_hoop.hpp"

namespace hoops {

struct OmegaSegment {
  Elem g = -1;            // the element this segment belongs to
  Filter value;           // the chosen value V_g
  std::vector<Mask> classes;  // right classes, ascending in the quotient order
};

struct OmegaChain {
  std::vector<OmegaSegment> segments;
  std::vector<int> offsets;  // global index of each segment's least point
  int points = 0;

  int segment_of(int p) const;
  // global point index of class `c` in segment `s`
  int point(int s, int c) const { return offsets[size_t(s)] + c; }
};

struct MonotoneMap {
  Elem element = -1;
  std::vector<int> images;  // per global point
};

struct Representation {
  FiniteHoop algebra;
  OmegaChain omega;
  std::vector<MonotoneMap> maps;       // one per element, f0(a)
  std::vector<MonotoneMap> residuals;  // one per element, f0*(a)
};

// Inapplicable for non-basic M.  Well-definedness of the action and the
// residual on classes is checked at build time; a failure there is a
// FatalInconsistency.
Representation build_representation(FiniteHoop const& M);

struct RepresentationReport {
  bool pass = true;
  std::vector<std::string> failures;  // one line per failed property, with witness

  void expect(bool ok, std::string what);
};

// Checks, pointwise on Omega:
//   (i) the unit maps to the identity, (ii) the order embedding both
//   ways plus injectivity, (iii) composition realizes the product,
//   (iv)/(v) pointwise join/meet realize the lattice operations,
//   segment preservation, the residual adjunction with the three
//   derived laws, and (on chains of at most 8 points) uniqueness of
//   each residual among all monotone self-maps.
RepresentationReport verify_representation(Representation const& R);

enum class ExportFormat { json, dot };

// json: segments with class masks plus per-element image arrays.
// dot: one subgraph per segment with chain edges, and the action of
// `highlight` (default: the least element) as labeled arrows.
std::string export_representation(Representation const& R, ExportFormat format,
                                  Elem highlight = -1);

}  // namespace hoops
