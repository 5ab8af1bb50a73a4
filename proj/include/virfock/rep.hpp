#ifndef VIRFOCK_REP_HPP
#define VIRFOCK_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "virfock/operators.hpp"
#include "virfock/series.hpp"

namespace virfock {

struct SectorSpec {
  enum class Selector { Full, Parity, Charge };
  Selector selector = Selector::Full;
  int parameter = 0;  // parity (0/1) or charge n
  OperatorSpec weight = OperatorSpec::vir_half(0);
  bool include_charge_variable = false;
};

// Exact highest weight ((b + (1-2 lambda)/4 - n)^2)/2 - 2((1-2 lambda)/4)^2.
Surd hw_weight(const Surd& lambda, const Surd& b, int n);

// Brute-force trace sum over enumerated eigenvectors of q^{eigenvalue} z^{dg}.
// The weight operator must act diagonally on the fermion basis (checked) and
// its eigenvalues must lie on the quarter-integer lattice.
CharSeries trace_character(const SectorSpec& sector, long q_order, int z_window);

// Same trace restricted to one charge sector, with eigenvalues shifted by the
// sector highest weight (exponents are then integer levels, in quarters).
CharSeries sector_trace_shifted(int charge, const Surd& lambda, const Surd& b,
                                long q_order);

// The p(level) states h_{-k_l}...h_{-k_1} v_n over partitions of `level`,
// expanded in the fermion basis; verified independent and spanning.
std::vector<State> h_eigenbasis(int charge, int level);

// Exact reduced-echelon basis of {v in the degh=level cell of F_(charge) :
// L^{lambda,b}_j v = 0, j = 1..j_max}.
std::vector<State> singular_vector_search(const Surd& lambda, const Surd& b,
                                          int charge, int level, int j_max);

// Staircase monomial family at lambda=1/2, b=m/sqrt(2), charge 0: even
// occupations 0..2(k-1) plus odd occupations 2m+1..2(k+m)-1, at level k(k+m).
// These are the echelon leading terms of the exact kernel vectors found by
// singular_vector_search; the monomial itself is singular only at the lowest
// levels (the exact kernel vectors at higher levels carry correction terms).
// Requires k >= 0 for m >= 0, k >= -m for m < 0.
BasisVector explicit_singular(int m, int k);

enum class DecompCase { I, II, III };

struct SectorComparison {
  int charge;
  std::string hw_text;
  CharSeries computed;
  CharSeries predicted;
  bool agree;
  long agree_to_q4;
};

struct DecompositionReport {
  DecompCase kase;
  Surd b;
  std::vector<SectorComparison> sectors;
  bool telescoping_ok;       // Case II/III reducible-sector identity
  bool reassembly_even_ok;   // parity-sector reassembly vs c=1/2 characters
  bool reassembly_odd_ok;
  bool ok() const;
};

DecompositionReport decomposition_report(DecompCase kase, const Surd& b,
                                         long q_order, int sector_window = 4);

// Infers the decomposition case for lambda = 1/2 from b.
DecompCase classify_case(const Surd& b);

struct DiscreteSeriesSolution {
  Surd lambda;
  Surd b;
  Surd c;
  Surd h;
};

// Solves the discrete-series parameter equations at level m with labels
// (r,s), 1 <= s <= r <= m+1, charge n, for a chosen sign combination.
DiscreteSeriesSolution discrete_series_solve(int m, int r, int s, int n,
                                             int sign1, int sign2, int sign3);

// c = 1 - 6/((m+2)(m+3)) and h_{r,s} = (((m+3)r-(m+2)s)^2 - 1)/(4(m+2)(m+3))
Rat discrete_series_c(int m);
Rat discrete_series_h(int m, int r, int s);

}  // namespace virfock

#endif
