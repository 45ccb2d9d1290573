#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "f5gb/polynomial.hpp"

namespace f5gb {

enum class PairStatus : std::uint8_t { pending, treated, eliminated };

/// How an eliminated pair was shown to have a standard representation.
enum class Certificate : std::uint8_t { none, product, chain };

struct PairRecord {
  std::size_t i = 0, j = 0;
  Monomial gamma;
  unsigned degree = 0;
  PairStatus status = PairStatus::pending;
  Certificate certificate = Certificate::none;
  /// Basis element k cited by a chain certificate.
  std::size_t witness = 0;
};

/// Status of every pair (i, j), i < j, of a growing basis. Transitions are
/// pending -> treated and pending -> eliminated only.
class PairLedger {
 public:
  /// Registers basis element n and its pairs with 0..n-1 as pending.
  void add_element(std::size_t n);
  std::size_t element_count() const { return rows_.size(); }

  PairStatus status(std::size_t i, std::size_t j) const;
  void mark_treated(std::size_t i, std::size_t j);
  void mark_eliminated(std::size_t i, std::size_t j, Certificate cert, std::size_t witness = 0);
  Certificate certificate(std::size_t i, std::size_t j) const;

  /// A pair may be cited by the chain criterion once it is settled: treated, or
  /// eliminated while citing pairs that were already settled themselves.
  bool citable(std::size_t i, std::size_t j) const { return status(i, j) != PairStatus::pending; }

 private:
  struct Cell {
    PairStatus status = PairStatus::pending;
    Certificate cert = Certificate::none;
    std::uint32_t witness = 0;
  };
  Cell& cell(std::size_t i, std::size_t j);
  const Cell& cell(std::size_t i, std::size_t j) const;

  std::vector<std::vector<Cell>> rows_;  // rows_[j][i] for i < j
};

using CitablePair = std::function<bool(std::size_t, std::size_t)>;

/// First k (in index order) with k not in {i, j}, lm_k | gamma, and both (i, k)
/// and (j, k) citable.
std::optional<std::size_t> find_chain_witness(std::size_t i, std::size_t j, const Monomial& gamma,
                                              std::span<const Monomial> lms, const CitablePair& citable);

/// Buchberger's lcm (chain) criterion against the ledger's settled pairs.
bool lcm_criterion(const PairRecord& pair, std::span<const Monomial> lms, const PairLedger& ledger);

struct BuchbergerOptions {
  /// false runs the criterion-free variant used as an independent oracle.
  bool use_criteria = true;
  /// Gives up once the clock passes this point; see BuchbergerStats::aborted.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct BuchbergerStats {
  std::size_t pairs = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_eliminated = 0;
  std::size_t chain_eliminated = 0;
  /// The deadline passed; the returned basis is incomplete.
  bool aborted = false;
};

/// Classical Buchberger with normal pair selection (smallest lcm degree, then
/// smallest index pair). The result starts with interreduce(F).
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& options = {},
                                   BuchbergerStats* stats = nullptr);

/// Minimal, tail-reduced, monic, sorted by leading monomial ascending.
/// Precondition: the input is a Groebner basis.
std::vector<Polynomial> reduced_basis(std::span<const Polynomial> basis);

/// Criterion-free check that every s-polynomial reduces to zero.
bool is_groebner(std::span<const Polynomial> basis);

}  // namespace f5gb
