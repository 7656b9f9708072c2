#include "qg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qg {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b,
                         const char* op) {
  if (a.degree() != b.degree())
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()) + ")");
}

}  // namespace

Permutation Permutation::identity(int m) {
  if (m < 0) throw std::invalid_argument("identity: negative degree");
  std::vector<int> images(m);
  for (int j = 1; j <= m; ++j) images[j - 1] = j;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<bool> seen(m, false);
  for (int j = 0; j < m; ++j) {
    const int v = images[j];
    if (v < 1 || v > m)
      throw std::invalid_argument("permutation image " + std::to_string(v) +
                                  " at position " + std::to_string(j + 1) +
                                  " outside 1.." + std::to_string(m));
    if (seen[v - 1])
      throw std::invalid_argument("permutation repeats image " +
                                  std::to_string(v) + "; not a bijection");
    seen[v - 1] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    const std::vector<std::vector<int>>& cycles, int m) {
  std::vector<int> images(m);
  for (int j = 1; j <= m; ++j) images[j - 1] = j;
  std::vector<bool> used(m, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > m)
        throw std::invalid_argument("cycle figure " + std::to_string(from) +
                                    " outside 1.." + std::to_string(m));
      if (used[from - 1])
        throw std::invalid_argument("figure " + std::to_string(from) +
                                    " appears in two cycles");
      used[from - 1] = true;
      images[from - 1] = to;
    }
  }
  return from_images(std::move(images));
}

Permutation Permutation::operator*(const Permutation& q) const {
  require_same_degree(*this, q, "compose");
  std::vector<int> images(degree());
  for (int j = 1; j <= degree(); ++j) images[j - 1] = q.apply(apply(j));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int j = 1; j <= degree(); ++j) images[apply(j) - 1] = j;
  return Permutation(std::move(images));
}

Permutation Permutation::conjugated_by(const Permutation& s) const {
  require_same_degree(*this, s, "conjugate");
  // (j^s)^result = (j^p)^s, i.e. result = s^-1 p s without forming s^-1.
  std::vector<int> images(degree());
  for (int j = 1; j <= degree(); ++j) images[s.apply(j) - 1] = s.apply(apply(j));
  return Permutation(std::move(images));
}

Permutation Permutation::pow(long k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  std::vector<int> images(degree());
  for (const auto& cycle : cycles()) {
    const long len = static_cast<long>(cycle.size());
    const long shift = k % len;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + shift) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> visited(degree(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (visited[start - 1]) continue;
    std::vector<int> cycle;
    int j = start;
    do {
      visited[j - 1] = true;
      cycle.push_back(j);
      j = apply(j);
    } while (j != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::one_line() const {
  std::string s;
  for (int j = 1; j <= degree(); ++j) {
    if (j > 1) s += ' ';
    s += std::to_string(apply(j));
  }
  return s;
}

std::string Permutation::cycle_string() const {
  std::string s;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cycle[i]);
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= degree(); ++j)
    if (apply(j) != j) return false;
  return true;
}

Permutation Permutation::parse(const std::string& text, int degree) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty permutation string");
  const auto last = text.find_last_not_of(" \t\r\n");
  const std::string body = text.substr(first, last - first + 1);

  if (body == "id" || body == "()") return identity(degree);

  if (body.front() == '(') {
    std::vector<std::vector<int>> cycles;
    int max_figure = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[pos]))) {
        ++pos;
        continue;
      }
      if (body[pos] != '(')
        throw std::invalid_argument("expected '(' in cycle notation near \"" +
                                    body.substr(pos) + "\"");
      const auto close = body.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unterminated cycle in \"" + body + "\"");
      std::string inner = body.substr(pos + 1, close - pos - 1);
      std::replace(inner.begin(), inner.end(), ',', ' ');
      std::istringstream in(inner);
      std::vector<int> cycle;
      int figure;
      while (in >> figure) {
        cycle.push_back(figure);
        max_figure = std::max(max_figure, figure);
      }
      if (!in.eof())
        throw std::invalid_argument("bad figure in cycle \"" + inner + "\"");
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      pos = close + 1;
    }
    const int m = degree > 0 ? degree : max_figure;
    if (max_figure > m)
      throw std::invalid_argument("cycle figure " + std::to_string(max_figure) +
                                  " exceeds degree " + std::to_string(m));
    return from_cycles(cycles, m);
  }

  std::string spaced = body;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<int> images;
  int v;
  while (in >> v) images.push_back(v);
  if (!in.eof())
    throw std::invalid_argument("bad token in permutation \"" + body + "\"");
  if (degree > 0 && static_cast<int>(images.size()) != degree)
    throw std::invalid_argument("one-line permutation has " +
                                std::to_string(images.size()) +
                                " images, expected " + std::to_string(degree));
  return from_images(std::move(images));
}

}  // namespace qg
