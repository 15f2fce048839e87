#include "nart/linalg.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>

#include "nart/error.hpp"

namespace nart {

void normalize(SparseEntries& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseEntries out;
  out.reserve(v.size());
  for (auto& [c, x] : v) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += x;
    } else {
      out.emplace_back(c, std::move(x));
    }
    if (out.back().second.is_zero()) out.pop_back();
  }
  v = std::move(out);
}

SparseEntries axpy(SparseEntries a, const Scalar& factor, const SparseEntries& b) {
  // Merged rows are built in a recycled buffer; `a` becomes the next buffer.
  thread_local SparseEntries spare;
  SparseEntries out = std::move(spare);
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Scalar()).second.submul(factor, b[j].second);
      ++j;
    } else {
      a[i].second.submul(factor, b[j].second);
      if (!a[i].second.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  a.clear();
  spare = std::move(a);
  return out;
}

namespace {

const Scalar* find_entry(const SparseEntries& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

struct Row {
  SparseEntries entries;
  Scalar rhs;
  bool active = true;
};

using PivotKey = std::tuple<unsigned, unsigned long long, long long, long long>;

}  // namespace

Echelon eliminate(const Field& field, std::size_t columns, std::vector<SparseEntries> input, std::vector<Scalar> rhs,
                  const EliminationOptions& options) {
  Echelon out;
  out.field_ = field;
  out.columns_ = columns;
  out.pivot_row_.assign(columns, -1);
  if (!rhs.empty() && rhs.size() != input.size()) fail(ErrorCode::invalid_argument, "rhs length differs from row count");
  auto column_class = [&](std::size_t c) -> unsigned {
    return options.column_class.empty() ? 0u : options.column_class[c];
  };

  std::vector<Row> rows(input.size());
  std::vector<std::vector<std::size_t>> col_rows(columns);
  std::vector<long> col_count(columns, 0);
  for (std::size_t r = 0; r < input.size(); ++r) {
    normalize(input[r]);
    for (const auto& [c, v] : input[r]) {
      if (c >= columns) fail(ErrorCode::invalid_argument, "column index out of range");
      col_rows[c].push_back(r);
      ++col_count[c];
    }
    rows[r].entries = std::move(input[r]);
    rows[r].rhs = rhs.empty() ? field.zero() : rhs[r];
  }

  std::vector<std::size_t> active(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) active[r] = r;
  std::vector<std::size_t> stamp(rows.size(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> pivot_rows;

  for (std::size_t step = 0;; ++step) {
    std::optional<PivotKey> best;
    std::size_t best_row = 0, best_col = 0;
    std::vector<std::size_t> still_active;
    still_active.reserve(active.size());
    for (std::size_t r : active) {
      Row& row = rows[r];
      if (row.entries.empty()) {
        if (!row.rhs.is_zero()) {
          out.consistent_ = false;
          return out;
        }
        row.active = false;
        continue;
      }
      still_active.push_back(r);
      unsigned long long len = row.entries.size();
      for (const auto& [c, v] : row.entries) {
        unsigned cls = column_class(c);
        if (best && cls > std::get<0>(*best)) continue;
        PivotRule rule = cls == 0 ? options.rule : options.late_rule;
        PivotKey key;
        if (rule == PivotRule::ordered) {
          key = {cls, c, static_cast<long long>(len), static_cast<long long>(r)};
        } else {
          unsigned long long cost = (len - 1) * static_cast<unsigned long long>(col_count[c] - 1);
          if (rule == PivotRule::markowitz) {
            key = {cls, cost, static_cast<long long>(r), static_cast<long long>(c)};
          } else {
            key = {cls, cost, -static_cast<long long>(r), -static_cast<long long>(c)};
          }
        }
        if (!best || key < *best) {
          best = key;
          best_row = r;
          best_col = c;
        }
      }
    }
    active = std::move(still_active);
    if (!best) break;

    Row& prow = rows[best_row];
    Scalar inv = find_entry(prow.entries, best_col)->inverse();
    if (!inv.is_one()) {
      for (auto& [c, v] : prow.entries) v *= inv;
      prow.rhs *= inv;
    }
    prow.active = false;
    for (const auto& [c, v] : prow.entries) --col_count[c];
    active.erase(std::find(active.begin(), active.end(), best_row));

    for (std::size_t s : col_rows[best_col]) {
      if (s == best_row || stamp[s] == step) continue;
      stamp[s] = step;
      Row& row = rows[s];
      const Scalar* a = find_entry(row.entries, best_col);
      if (!a) continue;
      Scalar factor = *a;
      if (row.active) {
        for (const auto& [c, v] : row.entries) --col_count[c];
      }
      row.entries = axpy(std::move(row.entries), factor, prow.entries);
      row.rhs.submul(factor, prow.rhs);
      if (row.active) {
        for (const auto& [c, v] : row.entries) ++col_count[c];
      }
      for (const auto& [c, v] : prow.entries) {
        if (c != best_col) col_rows[c].push_back(s);
      }
    }
    col_rows[best_col] = {best_row};
    out.pivot_row_[best_col] = static_cast<long>(pivot_rows.size());
    out.pivot_cols_.push_back(best_col);
    pivot_rows.push_back(best_row);

    // Keep occurrence lists from growing without bound.
    if (step % 64 == 63) {
      for (auto& list : col_rows) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
    }
  }

  for (std::size_t r : pivot_rows) {
    out.rows_.push_back(std::move(rows[r].entries));
    out.rhs_.push_back(std::move(rows[r].rhs));
  }
  return out;
}

std::vector<Scalar> Echelon::particular() const {
  std::vector<Scalar> x(columns_, field_.zero());
  for (std::size_t i = 0; i < rows_.size(); ++i) x[pivot_cols_[i]] = rhs_[i];
  return x;
}

std::vector<SparseEntries> Echelon::nullspace(const std::function<bool(std::size_t)>& keep) const {
  std::vector<long> slot(columns_, -1);
  std::vector<SparseEntries> basis;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (is_pivot(c) || (keep && !keep(c))) continue;
    slot[c] = static_cast<long>(basis.size());
    basis.push_back({{c, field_.one()}});
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [c, v] : rows_[i]) {
      if (c == pivot_cols_[i] || slot[c] < 0) continue;
      basis[slot[c]].emplace_back(pivot_cols_[i], -v);
    }
  }
  for (auto& v : basis) normalize(v);
  return basis;
}

std::vector<SparseEntries> Echelon::projected_nullspace(const std::function<bool(std::size_t)>& in_set) const {
  std::vector<long> slot(columns_, -1);
  std::vector<SparseEntries> basis;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (is_pivot(c) || !in_set(c)) continue;
    slot[c] = static_cast<long>(basis.size());
    basis.push_back({{c, field_.one()}});
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!in_set(pivot_cols_[i])) continue;
    for (const auto& [c, v] : rows_[i]) {
      if (c == pivot_cols_[i]) continue;
      check_invariant(in_set(c), "projection set is not closed under the elimination classes");
      if (slot[c] >= 0) basis[slot[c]].emplace_back(pivot_cols_[i], -v);
    }
  }
  for (auto& v : basis) normalize(v);
  return basis;
}

SparseEntries Echelon::reduce(SparseEntries v) const {
  normalize(v);
  // Pivot rows have zeros on the other pivot columns, so one pass suffices.
  SparseEntries work = v;
  for (const auto& [c, x] : v) {
    long r = c < pivot_row_.size() ? pivot_row_[c] : -1;
    if (r < 0) continue;
    const Scalar* a = find_entry(work, c);
    if (!a) continue;
    Scalar factor = *a;
    work = axpy(std::move(work), factor, rows_[r]);
  }
  return work;
}

std::vector<SparseEntries> row_space_basis(const Field& field, std::size_t columns, std::vector<SparseEntries> vectors) {
  EliminationOptions opts;
  opts.rule = PivotRule::ordered;
  Echelon e = eliminate(field, columns, std::move(vectors), {}, opts);
  std::vector<std::pair<std::size_t, SparseEntries>> rows;
  for (std::size_t i = 0; i < e.rank(); ++i) rows.emplace_back(e.pivot_columns()[i], e.rows()[i]);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseEntries> out;
  for (auto& [c, r] : rows) out.push_back(std::move(r));
  return out;
}

std::size_t rank_of(const Field& field, std::size_t columns, std::vector<SparseEntries> vectors) {
  return eliminate(field, columns, std::move(vectors), {}).rank();
}

std::vector<SparseEntries> class_zero_kernel(const Field& field, std::size_t columns, std::vector<SparseEntries> vectors,
                                             std::vector<std::uint8_t> column_class) {
  EliminationOptions opts;
  opts.rule = PivotRule::markowitz;
  opts.late_rule = PivotRule::ordered;
  opts.column_class = std::move(column_class);
  Echelon e = eliminate(field, columns, std::move(vectors), {}, opts);
  std::vector<std::pair<std::size_t, SparseEntries>> rows;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    std::size_t c = e.pivot_columns()[i];
    if (opts.column_class[c] != 0) rows.emplace_back(c, e.rows()[i]);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseEntries> out;
  for (auto& [c, r] : rows) out.push_back(std::move(r));
  return out;
}

}  // namespace nart
