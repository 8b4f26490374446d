#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

enum class Step : char { up = 'u', down = 'd' };

/// Balanced word over {u, d} whose prefixes never have more d than u.
class DyckPath {
 public:
  DyckPath() = default;
  /// Validates balance and prefix non-negativity.
  explicit DyckPath(std::vector<Step> steps);

  /// Accepts u/d (either case) and '(' / ')'. On failure the DomainError
  /// message names the first offending 1-based position.
  static DyckPath parse(std::string_view word);

  /// Every Dyck path of semilength n, in lexicographic order with u < d.
  static std::vector<DyckPath> all(std::size_t n);

  std::size_t semilength() const { return steps_.size() / 2; }
  std::size_t length() const { return steps_.size(); }
  const std::vector<Step>& steps() const { return steps_; }

  std::size_t count(Step s, std::size_t from, std::size_t to) const;

  /// Lowercase u/d word.
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

std::ostream& operator<<(std::ostream& os, const DyckPath& d);

/// Whether `steps` is a Dyck word.
bool is_dyck(std::span<const Step> steps);

enum class TunnelSide { left, centered, right };

std::string_view tunnel_side_name(TunnelSide s);

/// The tunnel under the `up_index`-th up-step, closed by the
/// `down_index`-th down-step (both 1-based ordinals). Its midpoint lies at
/// x = midpoint_x2 / 2.
struct Tunnel {
  std::size_t up_index = 0;
  std::size_t down_index = 0;
  std::size_t up_step = 0;    ///< 0-based step index of the up-step
  std::size_t down_step = 0;  ///< 0-based step index of the down-step
  std::size_t midpoint_x2 = 0;
  TunnelSide side = TunnelSide::left;

  /// Splits the path as A u B d C.
  struct Parts {
    std::vector<Step> a, b, c;
  };
  Parts decompose(const DyckPath& d) const;
};

/// One tunnel per up-step, ordered by up_index.
std::vector<Tunnel> tunnels(const DyckPath& d);

struct TunnelCounts {
  std::size_t left = 0;
  std::size_t centered = 0;
  std::size_t right = 0;
  friend bool operator==(const TunnelCounts&, const TunnelCounts&) = default;
};

TunnelCounts tunnel_counts(const DyckPath& d);

/// A centered multitunnel as a split D = A B C with |A| = |C|, B a
/// nonempty Dyck path and A C a Dyck path.
struct CenteredSplit {
  std::size_t outer = 0;  ///< |A| = |C|
  std::vector<Step> a, b, c;
};

/// Ordered by increasing |A|; the whole path (A = C = empty) comes first.
std::vector<CenteredSplit> centered_multitunnels(const DyckPath& d);

/// (first n steps, last n steps).
std::pair<std::vector<Step>, std::vector<Step>> halves(const DyckPath& d);

/// D1 ⊙ D2 = D1^(L) D2 D1^(R).
DyckPath odot(const DyckPath& d1, const DyckPath& d2);

/// Dyck path -> 132-avoiding permutation: number up-steps n..1 and
/// down-steps 1..n from left to right; p(u) = j when the tunnel of the
/// up-step numbered u ends at the down-step numbered j.
Permutation phi_inv(const DyckPath& d);

/// Inverse of phi_inv. Throws DomainError unless p avoids 132.
DyckPath phi(const Permutation& p);

}  // namespace permlab
