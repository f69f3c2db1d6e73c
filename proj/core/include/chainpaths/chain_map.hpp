#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainpaths {

/// One column (a, b) of a partial map written in two-row form: a is sent to b.
struct MapPair {
  int point = 0;
  int image = 0;

  auto operator<=>(const MapPair&) const = default;
};

/// Classes of order-preserving partial maps on the chain {0, ..., n-1}.
///
///   pc   decreasing, partial         c    decreasing, full
///   po   partial                     o    full
///   del  partial into {0, ..., n}    (the Delannoy class)
///   q    pc with 0 in the domain     qp   pc with 0 not in the domain
enum class ClassId { pc, c, po, o, del, q, qp };

std::string_view class_name(ClassId id) noexcept;
std::optional<ClassId> parse_class(std::string_view name) noexcept;

/// An order-preserving partial map from {0, ..., dom_size-1} into {0, ..., cod_size-1},
/// where cod_size is dom_size or dom_size + 1.
///
/// Pairs are kept sorted by point; images are nondecreasing along that order. Every
/// constructed value satisfies both, so order preservation is a type invariant.
/// Equality is structural.
class ChainMap {
 public:
  /// Validates and sorts. Throws Error with duplicate_domain_point, non_monotone_image,
  /// point_out_of_range or invalid_size.
  static ChainMap make(int dom_size, int cod_size, std::vector<MapPair> pairs);

  static ChainMap empty(int dom_size, int cod_size);
  static ChainMap empty(int dom_size) { return empty(dom_size, dom_size); }
  static ChainMap identity(int n);

  int dom_size() const noexcept { return dom_size_; }
  int cod_size() const noexcept { return cod_size_; }
  std::span<const MapPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool in_domain(int x) const noexcept;
  std::optional<int> apply(int x) const noexcept;

  /// Same pairs, different codomain. Throws if an image falls outside the new codomain.
  ChainMap with_codomain(int cod_size) const;
  /// The Delannoy model: codomain {0, ..., dom_size}.
  ChainMap widened() const { return with_codomain(dom_size_ + 1); }

  bool operator==(const ChainMap&) const = default;
  /// Lexicographic on (dom_size, cod_size, pairs); not the enumeration order.
  auto operator<=>(const ChainMap&) const = default;

 private:
  ChainMap(int dom_size, int cod_size, std::vector<MapPair> pairs)
      : dom_size_(dom_size), cod_size_(cod_size), pairs_(std::move(pairs)) {}

  int dom_size_ = 0;
  int cod_size_ = 0;
  std::vector<MapPair> pairs_;
};

bool is_decreasing(const ChainMap& m) noexcept;
bool is_full(const ChainMap& m) noexcept;

/// Left-to-right composition: x(fg) = (xf)g. Requires f.cod_size() == g.dom_size().
ChainMap compose(const ChainMap& f, const ChainMap& g);

/// Requires cod_size == dom_size.
bool is_idempotent(const ChainMap& m);

bool belongs_to(const ChainMap& m, ClassId c) noexcept;

struct MapStats {
  int dom_card = 0;
  int im_card = 0;
  std::optional<int> max_im;

  bool operator==(const MapStats&) const = default;
};

MapStats stats(const ChainMap& m) noexcept;

/// Q -> QP: drop the pair at 0 (always 0 -> 0 for a decreasing map).
ChainMap phi_q(const ChainMap& m);
/// QP -> Q: adjoin 0 -> 0.
ChainMap phi_q_inv(const ChainMap& m);

/// `{"n":4,"m":4,"map":[[1,1],[3,1]]}`
std::string to_json_text(const ChainMap& m);
/// Accepts the form above; "m" defaults to "n" when omitted. Throws ErrorCode::parse_error
/// for malformed text and the make() errors for invalid maps.
ChainMap parse_map(std::string_view text);

/// Two-row display form, e.g. `(1 3 / 1 1)`; the empty map shows as `( / )`.
std::string to_display(const ChainMap& m);

}  // namespace chainpaths
