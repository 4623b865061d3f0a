#include "enprune/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "enprune/field.hpp"

namespace enprune {

long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long rank) {
  if (rank == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = rank;
}

void BettiTable::add(int i, int j, long delta) { set(i, j, at(i, j) + delta); }

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [key, r] : entries_)
    if (key.first == i) s += r;
  return s;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw InputError("projective dimension of an empty Betti table");
  int p = 0;
  for (const auto& [key, r] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw InputError("regularity of an empty Betti table");
  int reg = std::numeric_limits<int>::min();
  for (const auto& [key, r] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::vector<long> BettiTable::ranks() const {
  std::vector<long> out;
  if (entries_.empty()) return out;
  out.assign(projective_dimension() + 1, 0);
  for (const auto& [key, r] : entries_)
    if (key.first >= 0) out[key.first] += r;
  return out;
}

bool BettiTable::is_linear_from(int start) const {
  for (const auto& [key, r] : entries_)
    if (key.first >= 1 && key.second != start + key.first - 1) return false;
  return true;
}

BettiTable BettiTable::shifted(int di, int dj) const {
  BettiTable out;
  for (const auto& [key, r] : entries_) out.set(key.first + di, key.second + dj, r);
  return out;
}

bool entrywise_leq(const BettiTable& a, const BettiTable& b) {
  for (const auto& [key, r] : a.entries_)
    if (r > b.at(key.first, key.second)) return false;
  return true;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "(zero)\n";
  int pd = 0, lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  int imin = 0;
  for (const auto& [key, r] : entries_) {
    pd = std::max(pd, key.first);
    imin = std::min(imin, key.first);
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  int width = 2;
  for (const auto& [key, r] : entries_) width = std::max(width, static_cast<int>(std::to_string(r).size()) + 1);
  std::ostringstream out;
  out << std::setw(7) << "";
  for (int i = imin; i <= pd; ++i) out << std::setw(width) << i;
  out << "\ntotal:";
  out << ' ';
  for (int i = imin; i <= pd; ++i) out << std::setw(width) << total(i);
  out << '\n';
  for (int row = lo; row <= hi; ++row) {
    out << std::setw(5) << row << ": ";
    for (int i = imin; i <= pd; ++i) {
      long r = at(i, row + i);
      out << std::setw(width) << (r ? std::to_string(r) : std::string("."));
    }
    out << '\n';
  }
  return out.str();
}

std::string BettiTable::to_json() const {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, r] : entries_) j["entries"].push_back({key.first, key.second, r});
  return j.dump();
}

BettiTable BettiTable::from_json(const std::string& text) {
  BettiTable t;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw InputError("Betti entry must be [i, j, rank]");
      long r = e[2].get<long>();
      if (r < 0) throw InputError("negative Betti number");
      t.add(e[0].get<int>(), e[1].get<int>(), r);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad Betti JSON: ") + ex.what());
  }
  return t;
}

}  // namespace enprune
