#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hadsec/exponent.hpp"

namespace hadsec {

class DescriptorError : public std::runtime_error {
 public:
  DescriptorError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class VarietyKind { veronese, segre, segre_veronese, rnc, custom };

/// A named toric variety together with its exponent matrix.
///
/// The matrix is built once on construction; copies share it.
class VarietyDescriptor {
 public:
  static VarietyDescriptor veronese(int d, int n);
  static VarietyDescriptor segre(std::vector<int> n);
  static VarietyDescriptor segre_veronese(std::vector<int> d, std::vector<int> n);
  static VarietyDescriptor rnc(int degree);
  static VarietyDescriptor custom(ExponentMatrix a, std::string source = "inline");

  [[nodiscard]] VarietyKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<int>& degrees() const noexcept { return d_; }
  [[nodiscard]] const std::vector<int>& dims() const noexcept { return n_; }
  [[nodiscard]] const ExponentMatrix& matrix() const noexcept { return *matrix_; }

  /// Ambient projective dimension: columns - 1.
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  /// rank(A) - 1.
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  /// Canonical text form; parse_descriptor(to_string()) round-trips.
  [[nodiscard]] std::string to_string() const;

 private:
  VarietyDescriptor(VarietyKind kind, std::vector<int> d, std::vector<int> n, std::string source, ExponentMatrix a);

  VarietyKind kind_;
  std::vector<int> d_;
  std::vector<int> n_;
  std::string source_;
  std::shared_ptr<const ExponentMatrix> matrix_;
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
};

/// Grammar:
///   veronese:d=<int>,n=<int> | segre:n=<ints> | sv:d=<ints>;n=<ints> | rnc:<int> | matrix:<path>
/// where <ints> is a comma-separated list.
VarietyDescriptor parse_descriptor(std::string_view text);

/// Comma-separated positive integers, e.g. an r-vector "2,2,3".
std::vector<int> parse_int_list(std::string_view text, std::size_t offset = 0);

}  // namespace hadsec
