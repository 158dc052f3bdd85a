#pragma once

#include "braided.hpp"
#include "cohomology.hpp"
#include "module_cat.hpp"

namespace ufc {

// Shipped example data. Everything here is constructed from closed forms and
// revalidated by the test suite against brute-force solves.

RingPtr trivial_ring();
RingPtr fibonacci_ring();
RingPtr ising_ring();

FSymbolSet fibonacci_fsymbols(double tol = kDefaultTol);
// Associator over the second root of the golden quadratic; pentagon-valid
// but admits no unitary gauge.
FSymbolSet yang_lee_fsymbols(double tol = kDefaultTol);
FSymbolSet ising_fsymbols(double tol = kDefaultTol);

RSymbolSet fibonacci_rsymbols();
RSymbolSet semion_rsymbols();

GroupPtr cyclic_group(int n);
GroupPtr klein_group();
GroupPtr symmetric_group_s3();

// Normalized 3-cochain on Z/2 with value -1 at (g, g, g).
Cochain semion_cocycle();

VecGData vec_z2_trivial(double tol = kDefaultTol);
VecGData vec_z2_semion(double tol = kDefaultTol);
VecGData vec_z3(double tol = kDefaultTol);

} // namespace ufc
