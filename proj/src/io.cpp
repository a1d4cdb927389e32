// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "skh/error.hpp"

namespace skh {

  namespace {

    struct Token {
      std::string text;
      std::size_t column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
      std::size_t        end_column;  // one past the last character
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      std::size_t       start  = 0;
      while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') {
          raw.remove_suffix(1);
        }
        ++number;
        Line line{number, {}, raw.size() + 1};
        for (std::size_t i = 0; i < raw.size();) {
          if (raw[i] == ' ' || raw[i] == '\t') {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') {
            ++j;
          }
          line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
          i = j;
        }
        if (!line.tokens.empty() && line.tokens.front().text[0] != '#') {
          lines.push_back(std::move(line));
        }
        start = end + 1;
      }
      return lines;
    }

    class Cursor {
     public:
      explicit Cursor(std::string_view text)
          : _lines(tokenize(text)),
            _last_line(std::count(text.begin(), text.end(), '\n') + 1) {}

      bool at_end() const {
        return _pos == _lines.size();
      }
      Line const& peek() const {
        return _lines[_pos];
      }
      Line const& next() {
        return _lines[_pos++];
      }
      bool next_is(std::string_view header) const {
        return !at_end() && peek().tokens.front().text == header;
      }

      [[noreturn]] void fail_here(std::string const& msg) const {
        if (at_end()) {
          throw ParseError(_last_line, 1, msg + " (end of input)");
        }
        throw ParseError(peek().number, peek().tokens.front().column, msg);
      }

      // The tokens following a "key:" header on one line.
      std::vector<Token> header(std::string_view key) {
        if (!next_is(key)) {
          fail_here("expected '" + std::string(key) + "'");
        }
        Line const& l = next();
        return {l.tokens.begin() + 1, l.tokens.end()};
      }

     private:
      std::vector<Line> _lines;
      std::size_t       _last_line;
      std::size_t       _pos = 0;
    };

    std::vector<std::string> names_of(std::vector<Token> const& tokens) {
      std::vector<std::string> out;
      for (auto const& t : tokens) {
        out.push_back(t.text);
      }
      return out;
    }

    // n rows of n tokens, each converted by cell(token).
    template <typename Cell>
    void read_rows(Cursor& c, std::size_t n, Cell cell) {
      for (std::size_t row = 0; row < n; ++row) {
        if (c.at_end() || c.peek().tokens.front().text.back() == ':') {
          c.fail_here("expected " + std::to_string(n) + " rows, found "
                      + std::to_string(row));
        }
        Line const& l = c.next();
        if (l.tokens.size() < n) {
          throw ParseError(l.number,
                           l.end_column,
                           "row has " + std::to_string(l.tokens.size())
                               + " entries, expected " + std::to_string(n));
        }
        if (l.tokens.size() > n) {
          throw ParseError(l.number,
                           l.tokens[n].column,
                           "row has " + std::to_string(l.tokens.size())
                               + " entries, expected " + std::to_string(n));
        }
        for (std::size_t col = 0; col < n; ++col) {
          cell(row, col, l.tokens[col], l.number);
        }
      }
    }

    std::string pad(std::string s, std::size_t width) {
      s.resize(std::max(width, s.size()), ' ');
      return s;
    }

    void emit_table(std::ostringstream& out,
                    Algebra const&      a,
                    Table const&        t,
                    std::size_t         width) {
      for (Elem x = 0; x < a.size(); ++x) {
        std::string line;
        for (Elem y = 0; y < a.size(); ++y) {
          line += y + 1 < a.size() ? pad(a.name(t(x, y)), width) + " "
                                   : a.name(t(x, y));
        }
        out << line << '\n';
      }
    }

  }  // namespace

  Algebra parse_algebra_file(std::string_view text) {
    Cursor                   c(text);
    std::vector<Token> const element_tokens = c.header("elements:");
    if (element_tokens.empty()) {
      c.fail_here("no elements declared");
    }
    std::vector<std::string> const names = names_of(element_tokens);
    std::unordered_map<std::string, Elem> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      index.emplace(names[i], static_cast<Elem>(i));
    }
    std::size_t const n      = names.size();
    auto const        lookup = [&](Token const& t, std::size_t line) {
      auto it = index.find(t.text);
      if (it == index.end()) {
        throw ParseError(line, t.column, "unknown element '" + t.text + "'");
      }
      return it->second;
    };
    auto const read_table = [&](std::string_view key) {
      if (!c.header(key).empty()) {
        c.fail_here("table header takes no arguments");
      }
      Table t(n);
      read_rows(c, n, [&](std::size_t r, std::size_t col, Token const& tok,
                          std::size_t line) {
        t.set(static_cast<Elem>(r), static_cast<Elem>(col), lookup(tok, line));
      });
      return t;
    };
    auto const read_constant = [&](std::string_view key) {
      std::size_t const line = c.peek().number;
      auto const        args = c.header(key);
      if (args.size() != 1) {
        throw ParseError(line, 1, std::string(key) + " takes one element");
      }
      return lookup(args.front(), line);
    };

    Table                meet = read_table("meet:");
    Table                join = read_table("join:");
    std::optional<Table> arrow;
    Constants            constants;
    if (c.next_is("arrow:")) {
      arrow = read_table("arrow:");
    }
    if (c.next_is("top:")) {
      constants.top = read_constant("top:");
    }
    if (c.next_is("bottom:")) {
      constants.bottom = read_constant("bottom:");
    }
    if (!c.at_end()) {
      c.fail_here("unexpected '" + c.peek().tokens.front().text + "'");
    }
    return make_algebra(
        names, std::move(meet), std::move(join), constants, std::move(arrow));
  }

  std::string emit_algebra_file(Algebra const& a, std::string_view comment) {
    std::ostringstream out;
    std::istringstream lines{std::string(comment)};
    for (std::string l; std::getline(lines, l);) {
      out << "# " << l << '\n';
    }
    std::size_t width = 0;
    for (auto const& name : a.names()) {
      width = std::max(width, name.size());
    }
    out << "elements:";
    for (auto const& name : a.names()) {
      out << ' ' << name;
    }
    out << "\nmeet:\n";
    emit_table(out, a, a.meet_table(), width);
    out << "join:\n";
    emit_table(out, a, a.join_table(), width);
    if (a.has_arrow()) {
      out << "arrow:\n";
      emit_table(out, a, a.arrow_table(), width);
    }
    if (a.top()) {
      out << "top: " << a.name(*a.top()) << '\n';
    }
    if (a.bottom()) {
      out << "bottom: " << a.name(*a.bottom()) << '\n';
    }
    return out.str();
  }

  Poset parse_poset_file(std::string_view text) {
    Cursor                   c(text);
    std::vector<Token> const point_tokens = c.header("points:");
    if (point_tokens.empty()) {
      c.fail_here("no points declared");
    }
    std::size_t const n = point_tokens.size();
    if (!c.header("leq:").empty()) {
      c.fail_here("leq header takes no arguments");
    }
    Relation r(n);
    read_rows(c, n, [&](std::size_t row, std::size_t col, Token const& tok,
                        std::size_t line) {
      if (tok.text != "0" && tok.text != "1") {
        throw ParseError(line, tok.column, "expected 0 or 1");
      }
      r.set(static_cast<Elem>(row), static_cast<Elem>(col), tok.text == "1");
    });
    if (!c.at_end()) {
      c.fail_here("unexpected '" + c.peek().tokens.front().text + "'");
    }
    return Poset(names_of(point_tokens), std::move(r));
  }

  std::string emit_poset_file(Poset const& p) {
    std::ostringstream out;
    out << "points:";
    for (auto const& name : p.names()) {
      out << ' ' << name;
    }
    out << "\nleq:\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        out << (j ? " " : "") << (p.leq(i, j) ? '1' : '0');
      }
      out << '\n';
    }
    return out.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::Usage, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
  }

}  // namespace skh
