#include "lieidx/classical.hpp"

#include <atomic>
#include <thread>

#include "lieidx/random.hpp"

namespace lieidx {

std::string to_string(Rigidity r) {
  switch (r) {
    case Rigidity::Rigid: return "rigid";
    case Rigidity::Induced: return "induced";
    case Rigidity::NotClassified: return "not classified";
  }
  return "?";
}

Rigidity classify_rigidity(char type, const Partition& p) {
  switch (type) {
    case 'A': return p.parts().front() == 1 ? Rigidity::Rigid : Rigidity::Induced;
    case 'B':
    case 'D': return rigid_bd(p, type) ? Rigidity::Rigid : Rigidity::Induced;
    default: return Rigidity::NotClassified;
  }
}

bool SweepRow::passed(int rank) const {
  if (!valid) return true;
  if (!error.empty() || dim_centralizer != formula_dim) return false;
  if (rigidity != Rigidity::Rigid) return true;
  return powers_check && index.certified && index.stabilizer_dim == static_cast<std::size_t>(rank);
}

std::size_t ClassicalSweepReport::valid_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.valid;
  return n;
}

std::size_t ClassicalSweepReport::rigid_nonzero_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.valid && r.rigidity == Rigidity::Rigid && !r.is_zero_orbit();
  return n;
}

bool ClassicalSweepReport::passed() const {
  for (const auto& r : rows) {
    if (!r.passed(rank)) return false;
  }
  // B and D sweeps from rank 2 must not pass vacuously
  if ((type == 'B' || type == 'D') && rank >= 2 && rigid_nonzero_count() == 0) return false;
  return true;
}

std::string sweep_label(char type, int rank, const Partition& p) {
  return std::string(1, type) + std::to_string(rank) + p.to_string();
}

namespace {

void fill_row(const ClassicalRealization& real, SweepRow& row, const RunConfig& cfg) {
  const char type = real.type();
  const int rank = real.rank();
  try {
    row.rigidity = classify_rigidity(type, row.partition);
    if (type == 'B' || type == 'D') row.powers_predicted = powers_generate_center_bd(row.partition);
    const LieAlgebra& L = real.algebra();
    Element e = nilpotent_from_partition(real, row.partition);
    Subalgebra ge = centralizer(L, {e});
    row.dim_centralizer = ge.dim();
    row.formula_dim = centralizer_dim_formula(type, row.partition);
    row.dim_center = center_of(ge).dim();
    row.powers_check = center_powers_check(real, e);
    row.index = certified_index(ge, cfg.samples, split_seed(cfg.seed, sweep_label(type, rank, row.partition)),
                                cfg.coord_bound);
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
}

}  // namespace

ClassicalSweepReport sweep(char type, int rank, const RunConfig& cfg, unsigned jobs) {
  cfg.validate();
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D') {
    throw InputError(std::string("sweep: type must be A, B, C or D, got ") + type);
  }
  ClassicalRealization real(type, rank);
  const int n = natural_dim(type, rank);
  if (n > 13) throw InputError("sweep: natural dimension " + std::to_string(n) + " above 13");

  ClassicalSweepReport report;
  report.type = type;
  report.rank = rank;
  std::vector<std::size_t> todo;
  for (const auto& p : partitions_of(n)) {
    SweepRow row;
    row.partition = p;
    row.valid = valid_for(type, rank, p);
    if (row.valid) todo.push_back(report.rows.size());
    report.rows.push_back(std::move(row));
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) fill_row(real, report.rows[todo[k]], cfg);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace lieidx
