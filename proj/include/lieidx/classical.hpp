#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieidx/config.hpp"
#include "lieidx/indexcore.hpp"
#include "lieidx/orbits.hpp"

namespace lieidx {

enum class Rigidity { Rigid, Induced, NotClassified };
std::string to_string(Rigidity r);

/// Type A: only the zero orbit is rigid. B and D: rigid_bd. C: not classified.
Rigidity classify_rigidity(char type, const Partition& p);

struct SweepRow {
  Partition partition;
  bool valid = false;
  Rigidity rigidity = Rigidity::NotClassified;
  // The fields below are set only for valid partitions.
  std::size_t dim_centralizer = 0;
  std::size_t formula_dim = 0;
  std::size_t dim_center = 0;
  bool powers_check = false;
  /// powers_generate_center_bd for B and D; unset otherwise.
  std::optional<bool> powers_predicted;
  IndexCertificate index;
  /// Empty unless the row failed with an exception.
  std::string error;

  bool is_zero_orbit() const { return partition.parts().front() == 1; }
  /// Rigid rows need the powers check and a certified index; other rows
  /// are informational. Every valid row needs matching dimensions.
  bool passed(int rank) const;
};

struct ClassicalSweepReport {
  char type = 'A';
  int rank = 1;
  /// Every partition of the natural dimension, in decreasing lexicographic order.
  std::vector<SweepRow> rows;

  std::size_t valid_count() const;
  std::size_t rigid_nonzero_count() const;
  bool passed() const;
};

/// Label used to derive a row's seed, e.g. "B3(3,3,1)".
std::string sweep_label(char type, int rank, const Partition& p);

/// Runs every valid row on `jobs` threads (0: hardware concurrency); rows
/// keep their order and seeds, so the report does not depend on `jobs`.
/// Throws InputError for a bad type or a natural dimension above 13.
ClassicalSweepReport sweep(char type, int rank, const RunConfig& cfg, unsigned jobs = 0);

}  // namespace lieidx
