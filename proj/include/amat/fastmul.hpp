#ifndef AMAT_FASTMUL_HPP
#define AMAT_FASTMUL_HPP

#include <cstdint>
#include <string_view>

#include "amat/field.hpp"

namespace amat {

/// Scalar operation counts. Only ever incremented.
struct MulCounter {
  std::uint64_t scalar_mults = 0;
  std::uint64_t scalar_adds = 0;

  MulCounter& operator+=(const MulCounter& other) {
    scalar_mults += other.scalar_mults;
    scalar_adds += other.scalar_adds;
    return *this;
  }
};

IntMatrix schoolbook_multiply(const IntMatrix& a, const IntMatrix& b, MulCounter* counter = nullptr);

/// Winograd-Waksman product of two m x m integer matrices, m even.
/// Uses exactly m^3/2 + m^2 - m/2 scalar multiplications.
IntMatrix ww_multiply(const IntMatrix& a, const IntMatrix& b, MulCounter* counter = nullptr);

/// Seven-product block recursion, zero-padding odd sizes at every level.
/// Blocks of size <= 2 are multiplied directly.
IntMatrix ww_recursive(const IntMatrix& a, const IntMatrix& b, MulCounter* counter = nullptr);

/// Exact product of integer coefficient sequences (low to high) through
/// number-theoretic transforms modulo several primes and CRT recombination.
std::vector<Int> exact_convolve(const std::vector<Int>& f, const std::vector<Int>& g);

/// alpha * beta via power-basis polynomials: convolve, reduce modulo B(x,1),
/// map back to integral-basis coordinates.
Element mul_via_fft(const NumberField& field, const Element& alpha, const Element& beta);

enum class Strategy { schoolbook, ww, ww_recursive };
Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);

/// alpha * beta_k for each k, as the columns of N^(alpha) U. Fewer than n
/// multiplicands are padded with zeros; the result has one entry per input.
std::vector<Element> batch_multiply(const NumberField& field, const Element& alpha,
                                    const std::vector<Element>& betas, Strategy strategy,
                                    MulCounter* counter = nullptr);

}  // namespace amat

#endif  // AMAT_FASTMUL_HPP
