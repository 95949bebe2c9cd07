// Interned channel names.
//
// A Name is a one-word handle. Names spelled in source text are interned
// into a process-wide table and compared by their spelling, so canonical
// orderings do not depend on interning order. Fresh names are minted from
// an atomic counter; they cannot be spelled in the concrete syntax and
// sort after every interned name.

#ifndef BISIMKIT_NAME_HPP
#define BISIMKIT_NAME_HPP

#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>

namespace bisimkit {

class Name {
 public:
  Name() = default;

  static Name intern(std::string_view spelling) {
    static std::mutex mutex;
    static std::unordered_set<std::string> table;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = table.emplace(spelling).first;
    Name n;
    n.bits_ = reinterpret_cast<std::uintptr_t>(&*it);
    return n;
  }

  /// A name distinct from every other name ever produced in this process.
  static Name fresh() {
    static std::atomic<std::uint64_t> counter{0};
    Name n;
    n.bits_ = (static_cast<std::uintptr_t>(counter.fetch_add(1) + 1) << 1) | 1u;
    return n;
  }

  bool valid() const { return bits_ != 0; }
  bool is_fresh() const { return (bits_ & 1u) != 0; }

  std::string str() const {
    if (bits_ == 0) return "<invalid>";
    if (is_fresh()) return "_" + std::to_string(bits_ >> 1);
    return *reinterpret_cast<const std::string*>(bits_);
  }

  std::size_t hash() const { return std::hash<std::uintptr_t>{}(bits_); }

  friend bool operator==(Name a, Name b) { return a.bits_ == b.bits_; }

  friend std::strong_ordering operator<=>(Name a, Name b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    if (a.bits_ == 0 || b.bits_ == 0) return a.bits_ <=> b.bits_;
    if (a.is_fresh() != b.is_fresh())
      return a.is_fresh() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.is_fresh()) return a.bits_ <=> b.bits_;
    const auto& sa = *reinterpret_cast<const std::string*>(a.bits_);
    const auto& sb = *reinterpret_cast<const std::string*>(b.bits_);
    int c = sa.compare(sb);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uintptr_t bits_ = 0;
};

inline Name operator""_n(const char* s, std::size_t len) { return Name::intern({s, len}); }

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace bisimkit

template <>
struct std::hash<bisimkit::Name> {
  std::size_t operator()(bisimkit::Name n) const noexcept { return n.hash(); }
};

#endif  // BISIMKIT_NAME_HPP
