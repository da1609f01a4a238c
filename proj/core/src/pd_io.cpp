#include "zcolor/pd_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "zcolor/errors.hpp"

namespace zcolor {
namespace {

struct RawCrossing {
  std::array<EdgeLabel, 4> slots{};
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  int line() const { return line_; }
  int column() const { return column_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks_on_line() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }

  void skip_to_eol() {
    while (!at_end() && peek() != '\n') advance();
  }

  void expect(char c) {
    skip_blanks_on_line();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  long long integer() {
    skip_blanks_on_line();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) fail("label too large");
      advance();
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Pin {
  std::vector<EdgeLabel> labels;
  int line = 0;
};

void parse_header(Lexer& lx, std::vector<Pin>& pins) {
  int line = lx.line();
  lx.advance();  // '%'
  lx.skip_blanks_on_line();
  std::string word;
  while (std::isalpha(static_cast<unsigned char>(lx.peek()))) {
    word.push_back(lx.peek());
    lx.advance();
  }
  if (word != "component") lx.fail("unknown header '" + word + "'");
  lx.expect(':');
  Pin pin;
  pin.line = line;
  for (;;) {
    lx.skip_blanks_on_line();
    if (lx.at_end() || lx.peek() == '\n' || lx.peek() == '#') break;
    long long v = lx.integer();
    if (v == 0) lx.fail("labels must be positive");
    pin.labels.push_back(static_cast<EdgeLabel>(v));
  }
  if (pin.labels.empty()) lx.fail("empty component header");
  pins.push_back(std::move(pin));
}

RawCrossing parse_term(Lexer& lx) {
  RawCrossing rc;
  rc.line = lx.line();
  rc.column = lx.column();
  lx.advance();  // 'X'
  lx.expect('[');
  for (int i = 0; i < 4; ++i) {
    if (i > 0) lx.expect(',');
    long long v = lx.integer();
    if (v == 0) lx.fail("labels must be positive");
    rc.slots[static_cast<std::size_t>(i)] = static_cast<EdgeLabel>(v);
  }
  lx.expect(']');
  return rc;
}

// Chooses an orientation for every strand cycle and returns the crossing signs.
std::vector<int> infer_signs(const std::vector<RawCrossing>& raw, const std::vector<Pin>& pins) {
  std::map<EdgeLabel, std::vector<SlotRef>> occ;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i)
    for (int p = 0; p < 4; ++p) occ[raw[static_cast<std::size_t>(i)].slots[static_cast<std::size_t>(p)]].push_back({i, p});
  for (const auto& [e, slots] : occ)
    if (slots.size() != 2)
      throw DiagramError("arc multiplicity violated: label " + std::to_string(e) + " occurs " +
                         std::to_string(slots.size()) + " times (expected 2)");

  auto other = [&](EdgeLabel e, SlotRef s) {
    const auto& v = occ.at(e);
    return v[0] == s ? v[1] : v[0];
  };
  auto label_at = [&](SlotRef s) {
    return raw[static_cast<std::size_t>(s.crossing)].slots[static_cast<std::size_t>(s.pos)];
  };

  std::map<EdgeLabel, std::size_t> pin_of;
  for (std::size_t k = 0; k < pins.size(); ++k)
    for (EdgeLabel e : pins[k].labels) {
      if (!occ.count(e)) throw DiagramError("component header names unknown label " + std::to_string(e));
      if (pin_of.count(e)) throw DiagramError("label " + std::to_string(e) + " pinned twice");
      pin_of[e] = k;
    }

  std::vector<int> over_in(raw.size(), -1);  // entering slot of the over strand
  std::set<EdgeLabel> done;
  for (const auto& [start, slots] : occ) {
    if (done.count(start)) continue;
    // Walk one strand cycle, entering `start` at its first occurrence.
    std::vector<SlotRef> entering;
    std::vector<EdgeLabel> seq;
    SlotRef in = slots[0];
    EdgeLabel e = start;
    do {
      seq.push_back(e);
      done.insert(e);
      // `in` is where e enters a crossing in this direction; leave opposite.
      SlotRef out{in.crossing, (in.pos + 2) % 4};
      entering.push_back(in);
      EdgeLabel next = label_at(out);
      in = other(next, out);
      e = next;
    } while (!(e == start && in == slots[0]));

    // Reverse direction enters where the forward one exits.
    std::vector<SlotRef> entering_rev;
    for (SlotRef s : entering) entering_rev.push_back({s.crossing, (s.pos + 2) % 4});
    auto valid = [](const std::vector<SlotRef>& ins) {
      return std::none_of(ins.begin(), ins.end(), [](SlotRef s) { return s.pos == 2; });
    };
    bool fwd_ok = valid(entering);
    bool rev_ok = valid(entering_rev);
    if (!fwd_ok && !rev_ok)
      throw DiagramError("orientation inconsistency: no consistent orientation for the strand through label " +
                         std::to_string(start));

    std::vector<EdgeLabel> rev_seq(seq.rbegin(), seq.rend());
    auto follows = [](const std::vector<EdgeLabel>& s, EdgeLabel a, EdgeLabel b) {
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == a) return s[(i + 1) % s.size()] == b;
      return false;
    };

    std::optional<bool> use_fwd;
    if (pin_of.count(start)) {
      const Pin& pin = pins[pin_of.at(start)];
      for (EdgeLabel p : pin.labels)
        if (std::find(seq.begin(), seq.end(), p) == seq.end())
          throw DiagramError("component header on line " + std::to_string(pin.line) +
                             " mixes labels of different components");
      if (pin.labels.size() >= 2) {
        bool f = true, r = true;
        for (std::size_t i = 0; i + 1 < pin.labels.size(); ++i) {
          f = f && follows(seq, pin.labels[i], pin.labels[i + 1]);
          r = r && follows(rev_seq, pin.labels[i], pin.labels[i + 1]);
        }
        if (!f && !r)
          throw DiagramError("component header on line " + std::to_string(pin.line) +
                             " does not follow a strand");
        // A two-edge loop reads the same both ways; leave it to the crossings.
        if (f != r) use_fwd = f;
      }
    }
    if (use_fwd) {
      if ((*use_fwd && !fwd_ok) || (!*use_fwd && !rev_ok))
        throw DiagramError("orientation inconsistency: pinned orientation of the strand through label " +
                           std::to_string(start) + " contradicts an under-crossing");
    } else if (fwd_ok != rev_ok) {
      use_fwd = fwd_ok;
    } else {
      // No under-passes: orient by label succession (n followed by n+1).
      auto score = [&](const std::vector<EdgeLabel>& s) {
        EdgeLabel lo = *std::min_element(s.begin(), s.end());
        EdgeLabel hi = *std::max_element(s.begin(), s.end());
        int k = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          EdgeLabel a = s[i], b = s[(i + 1) % s.size()];
          if (b == a + 1 || (a == hi && b == lo)) ++k;
        }
        return k;
      };
      use_fwd = score(seq) >= score(rev_seq);
    }
    for (SlotRef s : (*use_fwd ? entering : entering_rev))
      if (s.pos == 1 || s.pos == 3) over_in[static_cast<std::size_t>(s.crossing)] = s.pos;
  }

  std::vector<int> signs(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (over_in[i] < 0) throw InternalError("over strand orientation not determined");
    signs[i] = over_in[i] == 3 ? 1 : -1;
  }
  return signs;
}

}  // namespace

ParsedPd parse_pd_with_labels(std::string_view text) {
  Lexer lx(text);
  std::vector<RawCrossing> raw;
  std::vector<Pin> pins;
  bool line_start = true;
  while (!lx.at_end()) {
    char c = lx.peek();
    if (c == '\n') {
      lx.advance();
      line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      lx.advance();
      continue;
    }
    if (c == '#') {
      lx.skip_to_eol();
      continue;
    }
    if (c == '%') {
      if (!line_start) lx.fail("header must start a line");
      parse_header(lx, pins);
      continue;
    }
    if (c == 'X') {
      raw.push_back(parse_term(lx));
      line_start = false;
      continue;
    }
    lx.fail(std::string("unexpected character '") + c + "'");
  }

  std::vector<int> signs = infer_signs(raw, pins);
  std::vector<Crossing> crossings;
  crossings.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) crossings.push_back({raw[i].slots, signs[i]});
  ParsedPd out;
  out.diagram = Diagram::from_crossings(std::move(crossings), 0, &out.relabel);
  return out;
}

Diagram parse_pd(std::string_view text) { return parse_pd_with_labels(text).diagram; }

Diagram read_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_pd(os.str());
}

std::string serialize_pd(const Diagram& d) {
  std::ostringstream os;
  for (const auto& comp : d.components()) {
    os << "% component:";
    for (EdgeLabel e : comp) os << ' ' << e;
    os << '\n';
  }
  // A two-edge loop that never passes under takes its direction from text
  // order: its lower label must run into the crossing printed first.
  std::vector<int> order(static_cast<std::size_t>(d.crossing_count()));
  std::iota(order.begin(), order.end(), 0);
  for (const auto& comp : d.components()) {
    if (comp.size() != 2) continue;
    EdgeLabel a = std::min(comp[0], comp[1]), b = std::max(comp[0], comp[1]);
    if (d.head(a).pos == 0 || d.head(b).pos == 0) continue;
    int h = d.head(a).crossing, t = d.tail(a).crossing;
    if (h > t) std::swap(order[static_cast<std::size_t>(h)], order[static_cast<std::size_t>(t)]);
  }
  bool first = true;
  for (int i : order) {
    const Crossing& c = d.crossing(i);
    if (!first) os << ' ';
    first = false;
    os << "X[" << c.slots[0] << ',' << c.slots[1] << ',' << c.slots[2] << ',' << c.slots[3] << ']';
  }
  if (!d.crossings().empty()) os << '\n';
  return os.str();
}

}  // namespace zcolor
