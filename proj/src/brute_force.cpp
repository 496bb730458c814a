#include "detmom/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "detmom/matrix.hpp"

namespace detmom {

void DiscreteDistribution::validate() const {
  if (atoms.empty()) {
    throw std::invalid_argument("DiscreteDistribution: no atoms");
  }
  Rational total;
  for (const auto& [value, prob] : atoms) {
    if (prob.sign() <= 0) {
      throw std::invalid_argument(
          "DiscreteDistribution: probabilities must be positive");
    }
    total += prob;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument(
        "DiscreteDistribution: probabilities must sum to 1");
  }
}

Rational DiscreteDistribution::moment(int r) const {
  Rational s;
  for (const auto& [value, prob] : atoms) s += prob * value.pow(r);
  return s;
}

Moments DiscreteDistribution::moments(int order) const {
  return discrete_moments(atoms, order);
}

namespace {

using int128 = __int128;

// Fraction-free elimination over the integers; exact because every division
// step divides evenly.
int128 det_int(std::vector<int128>& w, int n) {
  if (n == 0) return 1;
  int sign = 1;
  int128 prev = 1;
  auto cell = [&](int i, int j) -> int128& { return w[i * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (cell(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (cell(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(cell(k, j), cell(swap_row, j));
      sign = -sign;
    }
    const int128 pivot = cell(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        cell(i, j) = (cell(i, j) * pivot - cell(i, k) * cell(k, j)) / prev;
      }
      cell(i, k) = 0;
    }
    prev = pivot;
  }
  return sign > 0 ? cell(n - 1, n - 1) : -cell(n - 1, n - 1);
}

mpz_class int128_to_mpz(int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u & ~0UL);
  mpz_class r(hi);
  r <<= 64;
  r += mpz_class(lo);
  return neg ? mpz_class(-r) : r;
}

struct IntegerAtoms {
  std::vector<long> values;
  std::vector<mpz_class> prob_numerators;  // over the common denominator
  mpz_class denom;                         // common denominator of the probs
};

// Integer-valued atoms admit a much faster enumeration: matrices, Gram
// products and determinants all stay integral.
bool try_integer_atoms(const DiscreteDistribution& dist, int n, int p,
                       IntegerAtoms& out) {
  long max_abs = 0;
  for (const auto& [value, prob] : dist.atoms) {
    if (!value.is_integer() || !value.numerator().fits_slong_p()) return false;
    max_abs = std::max(max_abs, std::abs(value.numerator().get_si()));
    out.values.push_back(value.numerator().get_si());
  }
  // Gram entries are bounded by n * V^2 and the determinant by p! (n V^2)^p;
  // keep a wide margin below the 2^126 range of the elimination.
  const double v = std::max<long>(max_abs, 1);
  double log2_det = 0;
  for (int i = 2; i <= p; ++i) log2_det += std::log2(i);
  log2_det += p * (std::log2(std::max(n, 1)) + 2 * std::log2(v + 1));
  if (log2_det > 100) return false;

  out.denom = 1;
  for (const auto& [value, prob] : dist.atoms) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), out.denom.get_mpz_t(),
            prob.denominator().get_mpz_t());
    out.denom = l;
  }
  for (const auto& [value, prob] : dist.atoms) {
    out.prob_numerators.push_back(prob.numerator() *
                                  (out.denom / prob.denominator()));
  }
  return true;
}

// Sum of weight * |U^T U|^{k/2} over all assignments whose first entry is
// `first_atom`, with integer atom values. Returns the numerator over
// denom^(n*p).
mpz_class enumerate_integer(const IntegerAtoms& atoms, int n, int p, int k,
                            int first_atom) {
  const int cells = n * p;
  const int atom_count = static_cast<int>(atoms.values.size());
  std::vector<int> digit(static_cast<size_t>(cells), 0);
  digit[0] = first_atom;

  // prefix[i] = product of probability numerators of cells 0..i-1.
  std::vector<mpz_class> prefix(static_cast<size_t>(cells) + 1);
  prefix[0] = 1;
  for (int i = 0; i < cells; ++i) {
    prefix[i + 1] = prefix[i] * atoms.prob_numerators[digit[i]];
  }

  std::vector<int128> u(static_cast<size_t>(cells));
  std::vector<int128> work;
  mpz_class sum = 0;
  mpz_class value;
  while (true) {
    for (int i = 0; i < cells; ++i) u[i] = atoms.values[digit[i]];

    int128 det;
    if (p == n) {
      work = u;
      det = det_int(work, n);
    } else {
      work.assign(static_cast<size_t>(p) * p, 0);
      for (int a = 0; a < p; ++a) {
        for (int b = a; b < p; ++b) {
          int128 dot = 0;
          for (int r = 0; r < n; ++r) dot += u[r * p + a] * u[r * p + b];
          work[a * p + b] = dot;
          work[b * p + a] = dot;
        }
      }
      det = det_int(work, p);
    }

    const int power = (p == n) ? k : k / 2;
    if (det != 0) {
      value = int128_to_mpz(det);
      mpz_class powed;
      mpz_pow_ui(powed.get_mpz_t(), value.get_mpz_t(),
                 static_cast<unsigned long>(power));
      sum += prefix[cells] * powed;
    }

    // Row-major odometer over cells 1..cells-1 (cell 0 is fixed).
    int pos = cells - 1;
    while (pos >= 1 && digit[pos] == atom_count - 1) {
      digit[pos] = 0;
      --pos;
    }
    if (pos < 1) break;
    ++digit[pos];
    for (int i = pos; i < cells; ++i) {
      prefix[i + 1] = prefix[i] * atoms.prob_numerators[digit[i]];
    }
  }
  return sum;
}

// General rational-valued path; same odometer, exact rational arithmetic.
Rational enumerate_rational(const DiscreteDistribution& dist, int n, int p,
                            int k, int first_atom) {
  const int cells = n * p;
  const int atom_count = static_cast<int>(dist.atoms.size());
  std::vector<int> digit(static_cast<size_t>(cells), 0);
  digit[0] = first_atom;

  Rational sum;
  while (true) {
    RationalMatrix u(n, p);
    Rational weight(1);
    for (int i = 0; i < cells; ++i) {
      u.at(i / p, i % p) = dist.atoms[digit[i]].first;
      weight *= dist.atoms[digit[i]].second;
    }
    Rational det;
    int power;
    if (p == n) {
      det = det_exact(u);
      power = k;
    } else {
      det = det_exact(u.transpose() * u);
      power = k / 2;
    }
    if (!det.is_zero()) sum += weight * det.pow(power);

    int pos = cells - 1;
    while (pos >= 1 && digit[pos] == atom_count - 1) {
      digit[pos] = 0;
      --pos;
    }
    if (pos < 1) break;
    ++digit[pos];
  }
  return sum;
}

}  // namespace

Rational brute_force_moment(const DiscreteDistribution& dist, int n, int p,
                            int k, std::uint64_t budget, int workers) {
  dist.validate();
  if (k <= 0 || k % 2 != 0) {
    throw std::invalid_argument("brute_force_moment: k must be even and > 0");
  }
  if (n < 0 || p < 0) {
    throw std::invalid_argument("brute_force_moment: negative dimension");
  }
  if (p == 0) return Rational(1);

  const auto atom_count = static_cast<std::uint64_t>(dist.atoms.size());
  const int cells = n * p;
  std::uint64_t assignments = 1;
  bool over_budget = false;
  for (int i = 0; i < cells && !over_budget; ++i) {
    if (assignments > budget / atom_count) {
      over_budget = true;
    } else {
      assignments *= atom_count;
    }
  }
  if (over_budget || assignments > budget) {
    throw std::length_error(
        "brute_force_moment: enumeration budget exceeded; needs " +
        std::to_string(atom_count) + "^" + std::to_string(cells) +
        " matrix evaluations (budget " + std::to_string(budget) + ")");
  }

  IntegerAtoms atoms;
  const bool integral = try_integer_atoms(dist, n, p, atoms);

  // One sub-sum per first-entry atom, distributed over workers and merged in
  // atom order; the result is identical for any worker count.
  const int tasks = static_cast<int>(atom_count);
  std::vector<mpz_class> int_parts(static_cast<size_t>(tasks));
  std::vector<Rational> rat_parts(static_cast<size_t>(tasks));
  workers = std::clamp(workers, 1, tasks);

  auto run_task = [&](int t) {
    if (integral) {
      int_parts[static_cast<size_t>(t)] = enumerate_integer(atoms, n, p, k, t);
    } else {
      rat_parts[static_cast<size_t>(t)] = enumerate_rational(dist, n, p, k, t);
    }
  };

  if (workers == 1) {
    for (int t = 0; t < tasks; ++t) run_task(t);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int t = w; t < tasks; t += workers) run_task(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  if (integral) {
    mpz_class numerator = 0;
    for (const mpz_class& part : int_parts) numerator += part;
    mpz_class denominator;
    mpz_pow_ui(denominator.get_mpz_t(), atoms.denom.get_mpz_t(),
               static_cast<unsigned long>(cells));
    return Rational(numerator, denominator);
  }
  Rational sum;
  for (const Rational& part : rat_parts) sum += part;
  return sum;
}

}  // namespace detmom
