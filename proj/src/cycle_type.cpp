#include "qg/cycle_type.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qg {

CycleType::CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
  long long weighted = 0;
  const int m = static_cast<int>(counts_.size());
  for (int k = 1; k <= m; ++k) {
    if (counts_[k - 1] < 0)
      throw std::invalid_argument("cycle type has negative count r_" +
                                  std::to_string(k));
    weighted += static_cast<long long>(k) * counts_[k - 1];
  }
  if (weighted != m)
    throw std::invalid_argument("cycle counts sum to degree " +
                                std::to_string(weighted) + ", expected " +
                                std::to_string(m));
}

CycleType CycleType::identity(int m) {
  std::vector<int> counts(m, 0);
  if (m > 0) counts[0] = m;
  return CycleType(std::move(counts));
}

CycleType CycleType::of(const Permutation& p) {
  std::vector<int> counts(p.degree(), 0);
  for (const auto& cycle : p.cycles()) ++counts[cycle.size() - 1];
  return CycleType(std::move(counts));
}

std::vector<int> CycleType::parts() const {
  std::vector<int> parts;
  for (int k = 1; k <= degree(); ++k)
    parts.insert(parts.end(), counts_[k - 1], k);
  return parts;
}

std::string CycleType::partition_string() const {
  if (degree() == 0) return "0";
  std::string s;
  for (int part : parts()) {
    if (!s.empty()) s += '+';
    s += std::to_string(part);
  }
  return s;
}

std::string CycleType::r_tuple_string() const {
  std::string s = "(";
  for (int k = 1; k <= degree(); ++k) {
    if (k > 1) s += ',';
    s += std::to_string(counts_[k - 1]);
  }
  return s + ")";
}

CycleType CycleType::parse(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty cycle-type string");
  const auto last = text.find_last_not_of(" \t\r\n");
  const std::string body = text.substr(first, last - first + 1);

  if (body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("unterminated r-tuple \"" + body + "\"");
    std::string inner = body.substr(1, body.size() - 2);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream in(inner);
    std::vector<int> counts;
    int v;
    while (in >> v) counts.push_back(v);
    if (!in.eof())
      throw std::invalid_argument("bad entry in r-tuple \"" + body + "\"");
    return CycleType(std::move(counts));
  }

  if (body == "0") return CycleType(std::vector<int>{});
  std::string spaced = body;
  std::replace(spaced.begin(), spaced.end(), '+', ' ');
  std::istringstream in(spaced);
  std::vector<int> parts;
  int part;
  long long m = 0;
  while (in >> part) {
    if (part < 1)
      throw std::invalid_argument("partition part " + std::to_string(part) +
                                  " must be positive");
    parts.push_back(part);
    m += part;
  }
  if (!in.eof())
    throw std::invalid_argument("bad part in partition \"" + body + "\"");
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (int p : parts) ++counts[p - 1];
  return CycleType(std::move(counts));
}

Int centralizer_order(const CycleType& t) {
  Int order = 1;
  for (int k = 1; k <= t.degree(); ++k) {
    const int r = t.count(k);
    if (r == 0) continue;
    Int term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(r));
    order *= term;
    mpz_fac_ui(term.get_mpz_t(), static_cast<unsigned long>(r));
    order *= term;
  }
  return order;
}

Int class_size(const CycleType& t) {
  Int size = factorial(static_cast<unsigned long>(t.degree()));
  mpz_divexact(size.get_mpz_t(), size.get_mpz_t(),
               centralizer_order(t).get_mpz_t());
  return size;
}

namespace detail {

void power_counts(const std::vector<int>& counts, long k,
                  std::vector<int>& out) {
  out.assign(counts.size(), 0);
  for (int len = 1; len <= static_cast<int>(counts.size()); ++len) {
    const int r = counts[len - 1];
    if (r == 0) continue;
    const long g = std::gcd(static_cast<long>(len), k);
    out[len / g - 1] += static_cast<int>(g) * r;
  }
}

}  // namespace detail

CycleType power_type(const CycleType& t, long k) {
  if (k < 1) throw std::invalid_argument("power_type: exponent must be >= 1");
  std::vector<int> out;
  detail::power_counts(t.counts(), k, out);
  return CycleType(std::move(out));
}

Permutation representative(const CycleType& t) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len = 1; len <= t.degree(); ++len) {
    for (int c = 0; c < t.count(len); ++c) {
      std::vector<int> cycle(len);
      std::iota(cycle.begin(), cycle.end(), next);
      next += len;
      cycles.push_back(std::move(cycle));
    }
  }
  return Permutation::from_cycles(cycles, t.degree());
}

PartitionGenerator::PartitionGenerator(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("partitions of a negative integer");
}

bool PartitionGenerator::advance() {
  int k = static_cast<int>(a_.size()) - 1;
  int ones = 0;
  while (k >= 0 && a_[k] == 1) {
    ++ones;
    --k;
  }
  if (k < 0) return false;
  --a_[k];
  int rem = ones + 1;
  a_.resize(k + 1);
  const int cap = a_[k];
  while (rem > cap) {
    a_.push_back(cap);
    rem -= cap;
  }
  a_.push_back(rem);
  return true;
}

bool PartitionGenerator::next(std::vector<int>& parts) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    if (m_ > 0) a_.assign(1, m_);
  } else if (!advance()) {
    done_ = true;
    return false;
  }
  parts = a_;
  return true;
}

std::vector<CycleType> all_cycle_types(int m) {
  std::vector<CycleType> types;
  for_each_partition(m, [&](const std::vector<int>& parts) {
    std::vector<int> counts(m, 0);
    for (int p : parts) ++counts[p - 1];
    types.push_back(CycleType(std::move(counts)));
  });
  std::sort(types.begin(), types.end(),
            [](const CycleType& a, const CycleType& b) {
              return a.counts() > b.counts();
            });
  return types;
}

Int partition_count(int m) {
  if (m < 0) throw std::invalid_argument("partition_count of a negative integer");
  std::vector<Int> p(m + 1);
  p[0] = 1;
  for (int i = 1; i <= m; ++i) {
    Int acc = 0;
    for (int j = 1;; ++j) {
      const long g1 = static_cast<long>(j) * (3L * j - 1) / 2;
      const long g2 = static_cast<long>(j) * (3L * j + 1) / 2;
      if (g1 > i && g2 > i) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      if (g1 <= i) acc += sign * p[i - g1];
      if (g2 <= i) acc += sign * p[i - g2];
    }
    p[i] = acc;
  }
  return p[m];
}

}  // namespace qg
