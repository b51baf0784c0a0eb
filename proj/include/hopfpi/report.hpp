#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "hopfpi/matrix.hpp"

namespace hopfpi {

enum class ClauseStatus { pass, fail, skipped };

inline const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::skipped: return "skipped";
  }
  return "?";
}

struct Clause {
  std::string name;
  ClauseStatus status = ClauseStatus::pass;
  std::vector<std::size_t> witness_index;
  std::vector<std::string> witness;
  std::string note;

  bool passed() const { return status == ClauseStatus::pass; }
  bool failed() const { return status == ClauseStatus::fail; }

  static Clause pass(std::string name) { return {std::move(name), ClauseStatus::pass, {}, {}, {}}; }
  static Clause skip(std::string name, std::string why) {
    return {std::move(name), ClauseStatus::skipped, {}, {}, std::move(why)};
  }
  static Clause fail(std::string name, std::vector<std::size_t> index, std::vector<std::string> witness,
                     std::string note = {}) {
    return {std::move(name), ClauseStatus::fail, std::move(index), std::move(witness), std::move(note)};
  }
};

/// An ordered list of named clauses. Order is part of the contract.
struct AxiomReport {
  std::vector<Clause> clauses;

  bool ok() const {
    return std::none_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.failed(); });
  }
  std::vector<const Clause*> failures() const {
    std::vector<const Clause*> out;
    for (const auto& c : clauses)
      if (c.failed()) out.push_back(&c);
    return out;
  }
  const Clause* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
  void add(Clause c) { clauses.push_back(std::move(c)); }
  void append(const AxiomReport& other) {
    clauses.insert(clauses.end(), other.clauses.begin(), other.clauses.end());
  }
  std::size_t count(ClauseStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(clauses.begin(), clauses.end(), [s](const Clause& c) { return c.status == s; }));
  }
};

/// Clause comparing two maps. On failure the witness is the first basis
/// vector where they differ together with the column lhs - rhs.
template <ExactField K>
Clause compare_maps(std::string name, const Matrix<K>& lhs, const Matrix<K>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return Clause::fail(std::move(name), {}, {}, "shape " + lhs.shape() + " vs " + rhs.shape());
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      if (!(lhs(i, j) == rhs(i, j))) {
        Vec<K> diff(lhs.rows());
        for (std::size_t r = 0; r < lhs.rows(); ++r) diff[r] = lhs(r, j) - rhs(r, j);
        return Clause::fail(std::move(name), {j}, to_strings<K>(diff));
      }
  return Clause::pass(std::move(name));
}

template <ExactField K>
Clause compare_vectors(std::string name, std::vector<std::size_t> index, const Vec<K>& lhs, const Vec<K>& rhs) {
  if (lhs == rhs) return Clause::pass(std::move(name));
  Vec<K> diff(lhs.size());
  for (std::size_t r = 0; r < lhs.size() && r < rhs.size(); ++r) diff[r] = lhs[r] - rhs[r];
  return Clause::fail(std::move(name), std::move(index), to_strings<K>(diff));
}

/// First failing clause of a sequence checked under one name, or pass.
inline Clause first_failure(std::string name, std::initializer_list<Clause> parts) {
  for (const auto& p : parts)
    if (p.failed()) {
      Clause c = p;
      c.note = c.note.empty() ? p.name : p.name + ": " + c.note;
      c.name = std::move(name);
      return c;
    }
  return Clause::pass(std::move(name));
}

/// Evaluates f(0..count-1), possibly on several threads, and returns the
/// results in index order.
template <class R, class F>
std::vector<R> ordered_map(std::size_t count, std::size_t jobs, F&& f) {
  std::vector<R> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n = std::min(jobs, count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hopfpi
