#include "witt/symbols.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace witt {
namespace {

struct Registry {
  std::mutex lock;
  std::vector<std::string> names;
  std::unordered_map<std::string, Var> index;

  Registry() {
    for (const char* n : {"a", "b"}) add(n);
    for (int i = 1; i <= var::kMaxGenerators; ++i) add("g" + std::to_string(i));
    for (const char* n : {"alpha", "beta", "x", "y", "aprime", "mu", "nu", "lambda"}) add(n);
  }

  Var add(const std::string& n) {
    auto v = static_cast<Var>(names.size());
    names.push_back(n);
    index.emplace(n, v);
    return v;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Var intern(std::string_view name) {
  auto& r = registry();
  std::lock_guard guard(r.lock);
  std::string key(name);
  if (auto it = r.index.find(key); it != r.index.end()) return it->second;
  if (r.names.size() >= 0xffff) throw std::length_error("symbol registry full");
  return r.add(key);
}

std::optional<Var> find_symbol(std::string_view name) {
  auto& r = registry();
  std::lock_guard guard(r.lock);
  if (auto it = r.index.find(std::string(name)); it != r.index.end()) return it->second;
  return std::nullopt;
}

std::string symbol_name(Var v) {
  auto& r = registry();
  std::lock_guard guard(r.lock);
  if (v >= r.names.size()) throw std::out_of_range("unknown symbol index");
  return r.names[v];
}

}  // namespace witt
