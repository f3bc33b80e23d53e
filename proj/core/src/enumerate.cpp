#include "aot/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>

#include "aot/canonical.hpp"
#include "aot/code_matrix.hpp"
#include "aot/error.hpp"

namespace aot {
namespace {

constexpr std::size_t kMaxRowSpace = 64;

// All |P|^width rows, identified by their index: the big-endian base-|P|
// digits of the index are the row's codes, so index order is row order.
class RowSpace {
 public:
  RowSpace(std::size_t base, std::size_t width) : base_(base), width_(width), size_(1) {
    for (std::size_t i = 0; i < width; ++i) size_ *= base;
    std::vector<std::size_t> perm(width);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint32_t> table(size_);
      for (std::size_t i = 0; i < size_; ++i) {
        std::size_t image = 0;
        for (std::size_t c = 0; c < width; ++c) image = image * base + digit(i, perm[c]);
        table[i] = static_cast<std::uint32_t>(image);
      }
      tables_.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t size() const { return size_; }
  std::size_t width() const { return width_; }

  std::uint32_t digit(std::size_t index, std::size_t column) const {
    std::size_t shift = 1;
    for (std::size_t c = column + 1; c < width_; ++c) shift *= base_;
    return static_cast<std::uint32_t>((index / shift) % base_);
  }

  // Whether `rows` (sorted) is no greater than any column-permuted, re-sorted image.
  bool is_minimal(const std::vector<std::uint32_t>& rows, std::vector<std::uint32_t>& scratch) const {
    for (std::size_t p = 1; p < tables_.size(); ++p) {
      scratch.resize(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) scratch[i] = tables_[p][rows[i]];
      std::sort(scratch.begin(), scratch.end());
      if (scratch < rows) return false;
    }
    return true;
  }

  bool has_distinct_columns(const std::vector<std::uint32_t>& rows) const {
    for (std::size_t a = 0; a < width_; ++a) {
      for (std::size_t b = a + 1; b < width_; ++b) {
        bool same = true;
        for (auto r : rows) {
          if (digit(r, a) != digit(r, b)) {
            same = false;
            break;
          }
        }
        if (same) return false;
      }
    }
    return true;
  }

  CodeMatrix to_matrix(const std::vector<std::uint32_t>& rows) const {
    CodeMatrix m{rows.size(), width_, {}};
    m.cells.reserve(rows.size() * width_);
    for (auto r : rows) {
      for (std::size_t c = 0; c < width_; ++c) m.cells.push_back(digit(r, c));
    }
    return m;
  }

 private:
  std::size_t base_;
  std::size_t width_;
  std::size_t size_;
  std::vector<std::vector<std::uint32_t>> tables_;
};

void orderly_search(const RowSpace& space, std::size_t max_states, std::vector<std::uint32_t>& rows,
                    std::vector<std::uint32_t>& scratch, std::set<CodeMatrix>& out) {
  if (!space.is_minimal(rows, scratch)) return;
  if (space.has_distinct_columns(rows)) out.insert(space.to_matrix(rows));
  if (rows.size() == max_states) return;
  for (std::uint32_t next = rows.back() + 1; next < space.size(); ++next) {
    rows.push_back(next);
    orderly_search(space, max_states, rows, scratch, out);
    rows.pop_back();
  }
}

void dedup_search(const RowSpace& space, std::size_t max_states, std::vector<std::uint32_t>& rows,
                  std::set<CodeMatrix>& out) {
  const CodeMatrix full = space.to_matrix(rows);
  const auto kept = distinct_columns(full);
  CodeMatrix collapsed{full.rows, kept.size(), {}};
  for (std::size_t r = 0; r < full.rows; ++r) {
    for (auto c : kept) collapsed.cells.push_back(full.at(r, c));
  }
  out.insert(minimize_over_permutations(collapsed).matrix);
  if (rows.size() == max_states) return;
  for (std::uint32_t next = rows.back() + 1; next < space.size(); ++next) {
    rows.push_back(next);
    dedup_search(space, max_states, rows, out);
    rows.pop_back();
  }
}

std::set<CodeMatrix> search_partition(std::size_t base, Bounds bounds, EnumerationStrategy strategy,
                                      std::size_t job, std::size_t jobs) {
  std::set<CodeMatrix> out;
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> scratch;
  for (std::size_t width = 1; width <= bounds.max_objects; ++width) {
    const RowSpace space(base, width);
    for (std::uint32_t first = 0; first < space.size(); ++first) {
      if (first % jobs != job) continue;
      rows.assign(1, first);
      if (strategy == EnumerationStrategy::orderly) {
        orderly_search(space, bounds.max_states, rows, scratch, out);
      } else {
        dedup_search(space, bounds.max_states, rows, out);
      }
    }
  }
  return out;
}

std::vector<CodeMatrix> enumerate_codes(std::size_t base, Bounds bounds, const EnumerateOptions& options) {
  if (base == 0) throw Error(ErrorCode::empty_particulars, "enumeration needs at least one particular");
  if (bounds.unbounded()) {
    throw Error(ErrorCode::infeasible_bounds, "max_objects and max_states must both be at least 1");
  }
  // r states admit at most |P|^r distinct columns.
  const double column_space = std::pow(static_cast<double>(base), static_cast<double>(bounds.max_states));
  if (column_space < static_cast<double>(bounds.max_objects)) {
    bounds.max_objects = static_cast<std::size_t>(column_space);
  }
  const double work = search_space(base, bounds);
  if (!(work <= options.work_limit)) {
    throw Error(ErrorCode::infeasible_bounds,
                "search space of about " + std::to_string(static_cast<long double>(work)) +
                    " exceeds the limit of " + std::to_string(options.work_limit));
  }

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<std::set<CodeMatrix>> parts(jobs);
  if (jobs == 1) {
    parts[0] = search_partition(base, bounds, options.strategy, 0, 1);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t job = 0; job < jobs; ++job) {
      workers.emplace_back([&, job] { parts[job] = search_partition(base, bounds, options.strategy, job, jobs); });
    }
    for (auto& w : workers) w.join();
  }

  std::set<CodeMatrix> merged;
  for (auto& part : parts) merged.merge(part);
  std::vector<CodeMatrix> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end(), [](const CodeMatrix& a, const CodeMatrix& b) {
    if (a.width != b.width) return a.width < b.width;
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cells < b.cells;
  });
  return out;
}

std::vector<ParticularObject> sorted_unique(std::vector<ParticularObject> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

double binomial(double n, double k) {
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

}  // namespace

double search_space(std::size_t particular_count, Bounds bounds) {
  double total = 0;
  double factorial = 1;
  for (std::size_t width = 1; width <= bounds.max_objects; ++width) {
    factorial *= static_cast<double>(width);
    const double rows = std::pow(static_cast<double>(particular_count), static_cast<double>(width));
    if (rows > static_cast<double>(kMaxRowSpace)) return INFINITY;
    double sets = 0;
    const auto limit = static_cast<std::size_t>(std::min(rows, static_cast<double>(bounds.max_states)));
    for (std::size_t k = 1; k <= limit; ++k) sets += binomial(rows, static_cast<double>(k));
    total += factorial * sets;
  }
  return total;
}

std::vector<ArbitraryObjectSystem> enumerate_systems(const std::vector<ParticularObject>& particulars,
                                                     Bounds bounds, const EnumerateOptions& options) {
  const auto alphabet = sorted_unique(particulars);
  std::vector<ArbitraryObjectSystem> out;
  for (const auto& matrix : enumerate_codes(alphabet.size(), bounds, options)) {
    out.push_back(ArbitraryObjectSystem::canonical(decode(matrix, alphabet)));
  }
  return out;
}

std::uint64_t count_systems(const std::vector<ParticularObject>& particulars, std::size_t n,
                            const EnumerateOptions& options) {
  const std::size_t base = sorted_unique(particulars).size();
  const double max_states = std::pow(static_cast<double>(base), static_cast<double>(n));
  if (max_states > static_cast<double>(kMaxRowSpace)) {
    throw Error(ErrorCode::infeasible_bounds, "|P|^n exceeds " + std::to_string(kMaxRowSpace) + " rows");
  }
  return enumerate_codes(base, {n, static_cast<std::size_t>(max_states)}, options).size();
}

std::uint64_t count_blueprints(std::size_t particular_count, std::size_t n, std::size_t max_states) {
  std::uint64_t total = 0;
  for (std::size_t width = 1; width <= n; ++width) {
    const double rows = std::pow(static_cast<double>(particular_count), static_cast<double>(width));
    if (rows > static_cast<double>(kMaxRowSpace)) {
      throw Error(ErrorCode::infeasible_bounds, "|P|^n exceeds " + std::to_string(kMaxRowSpace) + " rows");
    }
    const auto row_count = static_cast<std::uint64_t>(rows);
    // C(row_count, k) computed exactly with the multiplicative formula.
    std::uint64_t c = 1;
    for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(row_count, max_states); ++k) {
      c = c * (row_count - k + 1) / k;
      total += c;
    }
  }
  return total;
}

ParticularObjectSystem diagonal_system(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::empty_system, "the diagonal system needs k >= 1");
  std::vector<Row> rows(k, Row(k, ParticularObject("0")));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = ParticularObject("1");
  return validate_pos(std::move(rows));
}

void saturate(Universe& u, const EnumerateOptions& options) {
  auto systems = enumerate_systems(u.particulars(), u.bounds(), options);
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    for (auto& system : systems) u.register_system(std::move(system));
    return;
  }
  std::vector<std::thread> workers;
  for (std::size_t job = 0; job < jobs; ++job) {
    workers.emplace_back([&, job] {
      for (std::size_t i = job; i < systems.size(); i += jobs) u.register_system(systems[i]);
    });
  }
  for (auto& w : workers) w.join();
}

std::vector<ParticularObject> numbered_particulars(std::size_t n) {
  std::vector<ParticularObject> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::to_string(i));
  return out;
}

}  // namespace aot
