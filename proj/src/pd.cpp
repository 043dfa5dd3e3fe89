#include <cctype>
#include <charconv>
#include <map>

#include "builder.hpp"
#include "coil/diagram.hpp"
#include "coil/error.hpp"

namespace coil {

namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  long long integer() {
    skip_space();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected an edge label");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text) {
  PdLexer lex(text);
  std::vector<std::array<long long, 4>> terms;
  while (!lex.done()) {
    if (lex.peek() != 'X') lex.fail("expected X(...)");
    lex.expect('X');
    lex.expect('(');
    std::vector<long long> labels{lex.integer()};
    lex.skip_space();
    while (lex.peek() == ',') {
      lex.expect(',');
      labels.push_back(lex.integer());
      lex.skip_space();
    }
    lex.expect(')');
    if (labels.size() < 4) lex.fail("crossing term has " + std::to_string(labels.size()) + " labels, needs 4");
    if (labels.size() > 4) {
      throw Error(ErrorKind::NonQuadrivalent,
                  "vertex " + std::to_string(terms.size() + 1) + " has valence " + std::to_string(labels.size()));
    }
    for (auto l : labels) {
      if (l <= 0) lex.fail("edge labels must be positive");
    }
    terms.push_back({labels[0], labels[1], labels[2], labels[3]});
  }

  std::map<long long, std::vector<std::pair<int, int>>> uses;
  for (std::size_t x = 0; x < terms.size(); ++x) {
    for (int s = 0; s < 4; ++s) uses[terms[x][s]].emplace_back(static_cast<int>(x), s);
  }
  for (const auto& [label, where] : uses) {
    if (where.size() != 2) {
      throw Error(ErrorKind::EdgePairingError,
                  "edge " + std::to_string(label) + " appears " + std::to_string(where.size()) + " times");
    }
  }

  detail::Builder b;
  b.set_strict_hints(true);
  for (std::size_t x = 0; x < terms.size(); ++x) b.add_crossing(1, 0);
  for (const auto& [label, where] : uses) {
    b.link(b.slot(where[0].first, where[0].second), b.slot(where[1].first, where[1].second));
  }
  PlanarDiagram d = b.finish({}).diagram;
  if (!satisfies_euler(d)) {
    throw Error(ErrorKind::NonPlanarRotation, "rotation system does not embed in the sphere");
  }
  return d;
}

std::string emit_pd(const PlanarDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X(";
    for (int s = 0; s < 4; ++s) {
      if (s) out += ',';
      out += std::to_string(c.edges[s] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace coil
