#include "hadsec/descriptor.hpp"

#include <charconv>

namespace hadsec {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Parses "<key>=<ints>" and returns the list; `offset` is the absolute
// position of `text` within the full descriptor, for error messages.
std::vector<int> parse_keyed(std::string_view text, std::string_view key, std::size_t offset) {
  if (text.substr(0, key.size()) != key || text.size() <= key.size() || text[key.size()] != '=') {
    throw DescriptorError("expected '" + std::string(key) + "=<ints>'", offset);
  }
  return parse_int_list(text.substr(key.size() + 1), offset + key.size() + 1);
}

int single(const std::vector<int>& v, std::string_view what, std::size_t offset) {
  if (v.size() != 1) throw DescriptorError(std::string(what) + " takes a single integer", offset);
  return v.front();
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text, std::size_t offset) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    int value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw DescriptorError("expected an integer", offset + start);
    if (value < 1) throw DescriptorError("integers must be positive", offset + start);
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw DescriptorError("expected ',' between integers", offset + pos);
    ++pos;
  }
  return out;
}

VarietyDescriptor::VarietyDescriptor(VarietyKind kind, std::vector<int> d, std::vector<int> n, std::string source,
                                     ExponentMatrix a)
    : kind_(kind), d_(std::move(d)), n_(std::move(n)), source_(std::move(source)) {
  validate_toric(a);
  ambient_ = a.cols() - 1;
  dim_ = rational_rank(a) - 1;
  matrix_ = std::make_shared<const ExponentMatrix>(std::move(a));
}

VarietyDescriptor VarietyDescriptor::veronese(int d, int n) {
  std::vector<int> dv{d}, nv{n};
  auto a = build_segre_veronese(dv, nv);
  return {VarietyKind::veronese, std::move(dv), std::move(nv), {}, std::move(a)};
}

VarietyDescriptor VarietyDescriptor::segre(std::vector<int> n) {
  std::vector<int> d(n.size(), 1);
  auto a = build_segre_veronese(d, n);
  return {VarietyKind::segre, std::move(d), std::move(n), {}, std::move(a)};
}

VarietyDescriptor VarietyDescriptor::segre_veronese(std::vector<int> d, std::vector<int> n) {
  auto a = build_segre_veronese(d, n);
  return {VarietyKind::segre_veronese, std::move(d), std::move(n), {}, std::move(a)};
}

VarietyDescriptor VarietyDescriptor::rnc(int degree) {
  std::vector<int> dv{degree}, nv{1};
  auto a = build_segre_veronese(dv, nv);
  return {VarietyKind::rnc, std::move(dv), std::move(nv), {}, std::move(a)};
}

VarietyDescriptor VarietyDescriptor::custom(ExponentMatrix a, std::string source) {
  return {VarietyKind::custom, {}, {}, std::move(source), std::move(a)};
}

std::string VarietyDescriptor::to_string() const {
  switch (kind_) {
    case VarietyKind::veronese:
      return "veronese:d=" + std::to_string(d_[0]) + ",n=" + std::to_string(n_[0]);
    case VarietyKind::segre:
      return "segre:n=" + join(n_);
    case VarietyKind::segre_veronese:
      return "sv:d=" + join(d_) + ";n=" + join(n_);
    case VarietyKind::rnc:
      return "rnc:" + std::to_string(d_[0]);
    case VarietyKind::custom:
      return "matrix:" + source_;
  }
  return {};
}

VarietyDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DescriptorError("missing ':' after descriptor kind", text.size());
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  const std::size_t at = colon + 1;

  try {
    if (kind == "veronese") {
      const auto comma = body.find(",n=");
      if (comma == std::string_view::npos) throw DescriptorError("expected 'd=<int>,n=<int>'", at);
      const int d = single(parse_keyed(body.substr(0, comma), "d", at), "d", at);
      const int n = single(parse_keyed(body.substr(comma + 1), "n", at + comma + 1), "n", at + comma + 1);
      return VarietyDescriptor::veronese(d, n);
    }
    if (kind == "segre") return VarietyDescriptor::segre(parse_keyed(body, "n", at));
    if (kind == "sv") {
      const auto semi = body.find(';');
      if (semi == std::string_view::npos) throw DescriptorError("expected 'd=<ints>;n=<ints>'", at);
      auto d = parse_keyed(body.substr(0, semi), "d", at);
      auto n = parse_keyed(body.substr(semi + 1), "n", at + semi + 1);
      if (d.size() != n.size()) throw DescriptorError("d and n have different lengths", at + semi);
      return VarietyDescriptor::segre_veronese(std::move(d), std::move(n));
    }
    if (kind == "rnc") return VarietyDescriptor::rnc(single(parse_int_list(body, at), "rnc", at));
    if (kind == "matrix") {
      if (body.empty()) throw DescriptorError("missing matrix path", at);
      const std::string path(body);
      return VarietyDescriptor::custom(read_csv_file(path), path);
    }
  } catch (const ExponentError& e) {
    throw DescriptorError(e.what(), at);
  }
  throw DescriptorError("unknown descriptor kind '" + std::string(kind) + "'", 0);
}

}  // namespace hadsec
