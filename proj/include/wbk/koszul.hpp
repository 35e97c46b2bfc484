#pragma once
// Koszul complexes of a twisted (or untwisted) dwb-module M at an output
// bidegree (p,q). The (m,n)-term sits in homological degree n; weight = m - n.
//
// Up:   uwb((m,n),(p,q)) (x)_{S_m x S_n} M(m,n), m <= p. Computes Ext.
// Down: uwb((p,q),(m,n))^* (x)_{S_m x S_n} M(m,n), m >= p. Computes Tor.
//
// The hom spaces are taken in the Koszul dual category: untwisted for a
// twisted module and twisted otherwise.
//
// Both are computed orbit-reduced: the up term is a sum of copies of M(m,n)
// indexed by morphisms with order-preserving injections; the down term is the
// coinvariants of M(m,n) under the diagonal S_r permuting the last r pairs.

#include "wbk/complex.hpp"
#include "wbk/module.hpp"

namespace wbk {

ChainComplex koszul_up(const WbModule& m, int p, int q);
ChainComplex koszul_down(const WbModule& m, int p, int q);

// Homology at every output (p,q) in the window of m.
HomologyTable koszul_up_table(const WbModule& m, int threads = 1);
HomologyTable koszul_down_table(const WbModule& m, int threads = 1);

// Down term at (p,q) of degree r: coinvariants of M(p+r,q+r) under the pair-permuting S_r.
Coinvariants down_term(const WbModule& m, int p, int q, int r);

}  // namespace wbk
