#pragma once

#include <deque>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "pfaff/exactmath/errors.hpp"

namespace pfaff {

/// Symbol pools. Base variables are the coordinates x of the parameter space,
/// weight symbols are the exponents attached to hyperplanes. A polynomial
/// whose symbols come from both pools is Mixed; one without symbols is Constant.
enum class Pool { Constant, Base, Weight, Mixed };

inline const char* pool_name(Pool p) {
  switch (p) {
    case Pool::Constant: return "CONSTANT";
    case Pool::Base: return "BASE";
    case Pool::Weight: return "WEIGHT";
    case Pool::Mixed: return "MIXED";
  }
  return "?";
}

inline Pool join_pools(Pool a, Pool b) {
  if (a == Pool::Constant) return b;
  if (b == Pool::Constant) return a;
  return a == b ? a : Pool::Mixed;
}

namespace detail {

struct SymbolData {
  std::string name;
  Pool pool;
};

class SymbolRegistry {
 public:
  static SymbolRegistry& instance() {
    static SymbolRegistry registry;
    return registry;
  }

  const SymbolData* intern(std::string_view name, Pool pool) {
    std::lock_guard lock(mutex_);
    if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) {
      if (it->second->pool != pool)
        throw Error(ErrorCode::MixedPool, "symbol '" + std::string(name) + "' already registered in pool " +
                                              pool_name(it->second->pool));
      return it->second;
    }
    storage_.push_back(SymbolData{std::string(name), pool});
    const SymbolData* data = &storage_.back();
    by_name_.emplace(data->name, data);
    return data;
  }

  const SymbolData* find(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : it->second;
  }

 private:
  std::mutex mutex_;
  std::deque<SymbolData> storage_;
  std::unordered_map<std::string, const SymbolData*> by_name_;
};

}  // namespace detail

/// Interned symbol. Identity is pointer identity; ordering is by name so that
/// every canonical form is independent of registration order.
class Symbol {
 public:
  static Symbol base(std::string_view name) {
    return Symbol(detail::SymbolRegistry::instance().intern(name, Pool::Base));
  }
  static Symbol weight(std::string_view name) {
    return Symbol(detail::SymbolRegistry::instance().intern(name, Pool::Weight));
  }
  /// Existing symbol by name; throws ParseError when unknown.
  static Symbol lookup(std::string_view name) {
    const auto* data = detail::SymbolRegistry::instance().find(name);
    if (data == nullptr) throw Error(ErrorCode::ParseError, "unknown symbol '" + std::string(name) + "'");
    return Symbol(data);
  }
  static bool exists(std::string_view name) { return detail::SymbolRegistry::instance().find(name) != nullptr; }

  [[nodiscard]] const std::string& name() const { return data_->name; }
  [[nodiscard]] Pool pool() const { return data_->pool; }

  friend bool operator==(Symbol a, Symbol b) { return a.data_ == b.data_; }
  friend bool operator<(Symbol a, Symbol b) { return a.data_ != b.data_ && a.data_->name < b.data_->name; }
  friend bool operator>(Symbol a, Symbol b) { return b < a; }

 private:
  explicit Symbol(const detail::SymbolData* data) : data_(data) {}
  const detail::SymbolData* data_;
};

}  // namespace pfaff
