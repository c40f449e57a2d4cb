#pragma once

// Standard root data and automorphisms used by scenarios and tests.

#include "eala/autoroot.hpp"
#include "eala/gcm.hpp"

namespace eala::catalog {

// Finite root system of the given type on simple-root coordinates.
ears::RootDatum finite_datum(const rootsys::TypeLabel& t);

// Roots of a toroidal algebra of nullity nu over a finite type:
// {alpha + sum n_k delta_k} on (simple-root coordinates, delta_1..delta_nu).
ears::RootDatum toroidal_datum(const rootsys::TypeLabel& t, int nu);

// Roots of sl_{l+1} over a quantum torus in nu variables:
// {eps_i - eps_j + sum n_k delta_k} on (eps_1..eps_{l+1}, delta_1..delta_nu).
ears::RootDatum quantum_datum(int l, int nu);
// eps_i - eps_j -> eps_{l+2-j} - eps_{l+2-i}, fixing every delta_k.
RatMatrix quantum_flip(int l, int nu);

// Cartan matrix of a reduced finite type, as a GCM.
gcm::GCM finite_cartan(const rootsys::TypeLabel& t);

// Identity of the given size.
RatMatrix identity(size_t n);
// Block-diagonal extension of a matrix by an identity block.
RatMatrix extend_by_identity(const RatMatrix& m, size_t extra);

}  // namespace eala::catalog
