#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <variant>

#include "spex/error.hpp"
#include "spex/graph.hpp"

namespace spex {

/// Two l-cycles sharing exactly one vertex.
struct Cll {
  int l;
  friend bool operator==(const Cll&, const Cll&) = default;
};

/// The family of Theta graphs on k vertices.
struct Theta {
  int k;
  friend bool operator==(const Theta&, const Theta&) = default;
};

struct Explicit {
  Graph graph;
  friend bool operator==(const Explicit&, const Explicit&) = default;
};

class ForbiddenPattern {
 public:
  using Variant = std::variant<Cll, Theta, Explicit>;

  ForbiddenPattern(Cll c) : v_(c) {
    if (c.l < 3) throw InvalidArgument("Cll pattern needs l >= 3");
  }
  ForbiddenPattern(Theta t) : v_(t) {
    if (t.k < 4) throw InvalidArgument("Theta pattern needs k >= 4");
  }
  ForbiddenPattern(Explicit e) : v_(std::move(e)) {}

  const Variant& variant() const noexcept { return v_; }
  const Cll* cll() const noexcept { return std::get_if<Cll>(&v_); }
  const Theta* theta() const noexcept { return std::get_if<Theta>(&v_); }
  const Explicit* explicit_graph() const noexcept { return std::get_if<Explicit>(&v_); }

  /// "cll:L", "theta:K" or "explicit".
  std::string to_string() const {
    if (auto c = cll()) return "cll:" + std::to_string(c->l);
    if (auto t = theta()) return "theta:" + std::to_string(t->k);
    return "explicit";
  }

  /// Parses "cll:L" or "theta:K".
  static ForbiddenPattern parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw InvalidArgument("pattern must look like cll:L or theta:K, got '" + std::string(text) + "'");
    auto kind = text.substr(0, colon);
    auto num = text.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw InvalidArgument("pattern parameter is not an integer: '" + std::string(num) + "'");
    if (kind == "cll") return ForbiddenPattern(Cll{value});
    if (kind == "theta") return ForbiddenPattern(Theta{value});
    throw InvalidArgument("unknown pattern kind '" + std::string(kind) + "'");
  }

  friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;

 private:
  Variant v_;
};

}  // namespace spex
