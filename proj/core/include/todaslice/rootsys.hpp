#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace todaslice {

enum class CartanType { A, B, C, D };

CartanType parse_cartan_type(std::string_view label);
std::string to_string(CartanType type);

// Roots of a classical root system in simple-root coordinates.
//
// Root ids are dense integers.  Positive roots come first: the r simple roots
// (ids 0..r-1, in Dynkin order), then the remaining positive roots by
// increasing height.  The negative of root k has id num_positive() + k.
class RootSystem {
 public:
  static RootSystem build(CartanType type, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(coords_.size()); }
  int num_positive() const { return num_roots() / 2; }
  int max_height() const { return max_height_; }
  // Dimension of the Lie algebra of this type, r + |roots|.
  int algebra_dim() const { return rank_ + num_roots(); }

  const std::vector<int>& coords(int root) const { return coords_.at(root); }
  int height(int root) const { return heights_.at(root); }
  int negative(int root) const;
  bool is_positive(int root) const { return root < num_positive(); }
  bool is_simple(int root) const { return root < rank_; }
  int simple(int k) const { return k; }
  // Id of the root with the given coordinates, or -1.
  int find(const std::vector<int>& coords) const;

  // Roots grouped by height (levels ±1..±max_height; 0 never appears).
  std::map<int, std::vector<int>> height_spaces() const;

  std::string label() const;

 private:
  CartanType type_ = CartanType::A;
  int rank_ = 0;
  int max_height_ = 0;
  std::vector<std::vector<int>> coords_;
  std::vector<int> heights_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace todaslice
