#include "cobsec/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cobsec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Partitions of n with every part <= k.
std::int64_t count_bounded(int n, int k) {
  if (n < 0) return 0;
  k = std::clamp(k, 0, n);
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

}  // namespace

std::vector<Partition> enumerate(int d) {
  if (d < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(d, d, prefix, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts;
  for (int column = 1; column <= p.max_part(); ++column) {
    int height = 0;
    for (int part : p.parts()) {
      if (part >= column) ++height;
    }
    parts.push_back(height);
  }
  return Partition(std::move(parts));
}

std::int64_t partition_count(int d) { return count_bounded(d, d); }

std::int64_t count_constrained(int d, std::optional<int> max_part, std::optional<int> min_max_part) {
  if (d < 0) return 0;
  int hi = max_part.value_or(d);
  int lo = min_max_part.value_or(0);
  if (hi < lo) return 0;
  // Largest part in [lo, hi]: bounded by hi minus bounded by lo - 1.
  return count_bounded(d, hi) - (lo > 0 ? count_bounded(d, lo - 1) : 0);
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed partition '" + std::string(text) + "'"); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw fail();
  body = body.substr(1, body.size() - 2);
  if (trim(body).empty()) body = {};
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto token = trim(body.substr(0, comma));
    if (token.empty() || token.size() > 6) throw fail();
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
    }
    int value = std::stoi(std::string(token));
    if (value <= 0) throw fail();
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw fail();
  }
  return Partition(std::move(parts));
}

}  // namespace cobsec
