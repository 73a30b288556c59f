#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace kbqa {

// Dense row-major tensor of doubles with an optional gradient buffer.
// grad is either empty or exactly values.size() long.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> values;
  std::vector<double> grad;

  Tensor() = default;
  Tensor(std::vector<int> shape_, std::vector<double> values_);

  static Tensor zeros(std::vector<int> shape);
  static Tensor scalar(double v);
  static Tensor vector(std::vector<double> v);
  static Tensor matrix(int rows, int cols, std::vector<double> v);
  // Uniform values in [-range, range] from the given generator.
  static Tensor uniform(std::vector<int> shape, std::mt19937_64& rng,
                        double range = 0.08);

  int size() const { return static_cast<int>(values.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int rows() const;
  int cols() const;
  bool is_scalar() const { return size() == 1; }

  double& at(int i) { return values[static_cast<std::size_t>(i)]; }
  double at(int i) const { return values[static_cast<std::size_t>(i)]; }
  double& at(int i, int j);
  double at(int i, int j) const;

  bool has_grad() const { return !grad.empty(); }
  void ensure_grad();   // allocate zeros if absent
  void clear_grad() { grad.clear(); }
  void zero_values();

  std::string shape_str() const;
};

bool same_shape(const Tensor& a, const Tensor& b);
int shape_product(const std::vector<int>& shape);

}  // namespace kbqa
