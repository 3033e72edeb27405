#include "hahnfield/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "hahnfield/error.hpp"

namespace hahn {

namespace {

constexpr int kMaxDepth = 200;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  /// Identifier at the cursor without consuming it; empty if none.
  std::string_view peek_identifier() {
    skip_ws();
    std::size_t end = pos_;
    if (end < src_.size() && is_ident_start(src_[end])) {
      while (end < src_.size() && is_ident_char(src_[end])) ++end;
    }
    return src_.substr(pos_, end - pos_);
  }
  std::string identifier() {
    const std::string_view id = peek_identifier();
    if (id.empty()) fail("expected identifier");
    pos_ += id.size();
    return std::string(id);
  }
  bool consume_word(std::string_view word) {
    if (peek_identifier() != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect_word(std::string_view word) {
    if (!consume_word(word)) fail("expected '" + std::string(word) + "'");
  }

  mpz_class natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
  }

  mpq_class rational() {
    const std::size_t start = (skip_ws(), pos_);
    mpz_class num = natural();
    if (!consume('/')) return mpq_class(num);
    mpz_class den = natural();
    if (den == 0) fail_at(start, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  int sign() {
    if (consume('-')) return -1;
    consume('+');
    return 1;
  }

  [[noreturn]] void fail(const std::string& message, SyntaxErrorKind kind = SyntaxErrorKind::Syntax) {
    skip_ws();
    fail_at(pos_, message, kind);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message,
                            SyntaxErrorKind kind = SyntaxErrorKind::Syntax) const {
    throw SyntaxError(kind, pos, message);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

// Optional "+/- (rat * r2 | r2)" tail of a quadratic literal.
mpq_class root2_coefficient(Cursor& in) {
  if (in.consume_word("r2")) return 1;
  mpq_class q = in.rational();
  in.expect('*');
  in.expect_word("r2");
  return q;
}

Scalar value(Cursor& in) {
  const int s = in.sign();
  if (in.peek_identifier() == "r2") return Scalar(0, mpq_class(s * root2_coefficient(in)));
  mpq_class a = s * in.rational();
  if (in.consume('*')) {
    in.expect_word("r2");
    return Scalar(0, a);
  }
  const char next = in.peek();
  if (next == '+' || next == '-') {
    const int s2 = in.sign();
    return Scalar(a, mpq_class(s2 * root2_coefficient(in)));
  }
  return Scalar(a);
}

ChainPoint chain_point(Cursor& in) {
  const int s = in.sign();
  return ChainPoint(mpq_class(s * in.rational()));
}

std::size_t small_natural(Cursor& in, const char* what) {
  const std::size_t start = (in.skip_ws(), in.pos());
  const mpz_class n = in.natural();
  if (!n.fits_ulong_p() || n > 1'000'000) in.fail_at(start, std::string(what) + " too large");
  return n.get_ui();
}

ArchClass arch_class(Cursor& in) {
  const std::size_t start = (in.skip_ws(), in.pos());
  const std::string id = in.identifier();
  if (id == "Int") return ArchClass::Int;
  if (id == "Rat") return ArchClass::Rat;
  if (id == "RatRoot2") return ArchClass::RatRoot2;
  in.fail_at(start, "unknown component class '" + id + "'");
}

FieldClass field_class(Cursor& in) {
  const std::size_t start = (in.skip_ws(), in.pos());
  const std::string id = in.identifier();
  if (id == "Rat") return FieldClass::Rat;
  if (id == "Root2") return FieldClass::Root2;
  in.fail_at(start, "unknown field '" + id + "'");
}

GroupRef presentation(Cursor& in) {
  in.expect_word("HahnSum");
  in.expect('(');
  const std::size_t chain_start = (in.skip_ws(), in.pos());
  std::optional<ChainOrder> chain;
  const std::string kind = in.identifier();
  if (kind == "Finite") {
    in.expect('(');
    chain = ChainOrder::finite(small_natural(in, "chain size"));
    in.expect(')');
  } else if (kind == "Integers") {
    chain = ChainOrder::integers();
  } else if (kind == "Rationals") {
    chain = ChainOrder::rationals();
  } else {
    in.fail_at(chain_start, "unknown chain '" + kind + "'");
  }
  in.expect(';');
  const ArchClass component = arch_class(in);
  std::map<std::size_t, ArchClass> overrides;
  while (in.consume(',')) {
    const std::size_t at = (in.skip_ws(), in.pos());
    const std::size_t index = small_natural(in, "override point");
    in.expect(':');
    const ArchClass c = arch_class(in);
    if (!chain->is_finite()) {
      in.fail_at(at, "overrides need a Finite chain", SyntaxErrorKind::BadOverride);
    }
    if (index >= chain->size()) {
      in.fail_at(at, "override point outside the chain", SyntaxErrorKind::BadOverride);
    }
    if (!overrides.emplace(index, c).second) {
      in.fail_at(at, "duplicate override", SyntaxErrorKind::BadOverride);
    }
  }
  in.expect(')');
  return make_group(*chain, component, std::move(overrides));
}

GroupElement exponent_terms(Cursor& in, const GroupRef& group) {
  const std::size_t start = (in.skip_ws(), in.pos());
  std::vector<GroupElement::Term> terms;
  if (in.peek() == '(') {
    do {
      in.expect('(');
      ChainPoint p = chain_point(in);
      in.expect(',');
      Scalar v = value(in);
      in.expect(')');
      terms.emplace_back(std::move(p), std::move(v));
    } while (in.consume(','));
  } else {
    terms.emplace_back(ChainPoint(0), value(in));
  }
  try {
    return GroupElement(group, std::move(terms));
  } catch (const MathError& e) {
    in.fail_at(start, e.what(), SyntaxErrorKind::ExponentOutsideGroup);
  }
}

class SeriesParser {
 public:
  SeriesParser(std::string_view src, const Carrier& carrier, const Bindings& bindings)
      : in_(src), carrier_(carrier), bindings_(bindings) {}

  Series parse() {
    if (in_.at_end()) in_.fail("empty expression");
    Series result = expr();
    in_.expect_end();
    return result;
  }

 private:
  Series expr() {
    if (++depth_ > kMaxDepth) in_.fail("expression nested too deeply");
    Series acc = term();
    for (;;) {
      if (in_.consume('+')) {
        acc += term();
      } else if (in_.consume('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    --depth_;
    return acc;
  }

  Series term() {
    int s = 1;
    if (in_.consume('-')) {
      s = -1;
    } else {
      in_.consume('+');
    }
    Series acc = factor();
    while (in_.consume('*')) acc *= factor();
    return s < 0 ? -acc : acc;
  }

  Series factor() {
    Series base = atom();
    if (!in_.consume('^')) return base;
    const std::size_t at = (in_.skip_ws(), in_.pos());
    const mpz_class n = in_.natural();
    if (n > kMaxSeriesPower) in_.fail_at(at, "power exceeds " + std::to_string(kMaxSeriesPower));
    return power(base, n.get_ui());
  }

  Series atom() {
    const char c = in_.peek();
    const std::size_t at = in_.pos();
    if (is_digit(c)) return Series::constant(carrier_, Scalar(in_.rational()));
    if (c == '(') {
      in_.expect('(');
      Series inner = expr();
      in_.expect(')');
      return inner;
    }
    if (!is_ident_start(c)) in_.fail(in_.at_end() ? "unexpected end of input" : "unexpected character");
    const std::string id = in_.identifier();
    if (id == "r2") {
      if (carrier_.field != FieldClass::Root2) in_.fail_at(at, "r2 requires field Root2");
      return Series::constant(carrier_, Scalar(0, 1));
    }
    if (id == "t") return monomial();
    const auto it = bindings_.find(id);
    if (it == bindings_.end()) {
      in_.fail_at(at, "unknown identifier '" + id + "'", SyntaxErrorKind::UnknownIdent);
    }
    return it->second;
  }

  // After "t": either "^{exponent}" or a bare t = t^{1}.
  Series monomial() {
    const std::size_t mark = in_.pos();
    if (in_.consume('^') && in_.consume('{')) {
      GroupElement g = exponent_terms(in_, carrier_.group);
      in_.expect('}');
      return Series::monomial(carrier_, std::move(g), Scalar(1));
    }
    in_.reset(mark);
    try {
      return Series::monomial(carrier_, GroupElement::monomial(carrier_.group, 0, 1), Scalar(1));
    } catch (const MathError& e) {
      in_.fail_at(mark, e.what(), SyntaxErrorKind::ExponentOutsideGroup);
    }
  }

  Cursor in_;
  const Carrier& carrier_;
  const Bindings& bindings_;
  int depth_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view src) {
  Cursor in(src);
  Scalar s = value(in);
  in.expect_end();
  return s;
}

FieldClass parse_field(std::string_view src) {
  Cursor in(src);
  const FieldClass f = field_class(in);
  in.expect_end();
  return f;
}

ArchClass parse_arch_class(std::string_view src) {
  Cursor in(src);
  const ArchClass c = arch_class(in);
  in.expect_end();
  return c;
}

GroupRef parse_presentation(std::string_view src) {
  Cursor in(src);
  GroupRef g = presentation(in);
  in.expect_end();
  return g;
}

std::pair<FieldClass, GroupRef> parse_group_spec(std::string_view src) {
  Cursor in(src);
  in.expect_word("field");
  const FieldClass field = field_class(in);
  in.expect(';');
  in.expect_word("group");
  GroupRef group = presentation(in);
  in.expect_end();
  return {field, std::move(group)};
}

GroupElement parse_group_element(std::string_view src, const GroupRef& group) {
  Cursor in(src);
  if (in.consume('{')) {
    if (in.consume('}')) {
      in.expect_end();
      return GroupElement(group);
    }
    GroupElement g = exponent_terms(in, group);
    in.expect('}');
    in.expect_end();
    return g;
  }
  GroupElement g = exponent_terms(in, group);
  in.expect_end();
  return g;
}

Series parse_series(std::string_view src, const Carrier& carrier, const Bindings& bindings) {
  return SeriesParser(src, carrier, bindings).parse();
}

}  // namespace hahn
