#include "ontalign/xml.hpp"

#include <map>

#include "ontalign/errors.hpp"

namespace ontalign::xml {

const std::string* Element::attribute(std::string_view qname) const {
  for (const auto& attr : attributes) {
    if (attr.name == qname) return &attr.value;
  }
  return nullptr;
}

std::pair<std::string_view, std::string_view> split_qname(std::string_view qname) {
  const auto colon = qname.find(':');
  if (colon == std::string_view::npos) return {std::string_view{}, qname};
  return {qname.substr(0, colon), qname.substr(colon + 1)};
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || u >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Document run() {
    skip_bom();
    skip_misc(/*allow_doctype=*/true);
    if (at_end()) fail("document has no root element");
    if (peek() != '<') fail("text before the root element");
    Document doc;
    doc.root = read_element_tree();
    skip_misc(/*allow_doctype=*/false);
    if (!at_end()) fail("content after the root element");
    return doc;
  }

 private:
  struct Pos {
    std::size_t line;
    std::size_t column;
  };

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("malformed XML: " + message, line_, column_);
  }

  [[noreturn]] void fail_at(const std::string& message, Pos pos) const {
    throw ParseError("malformed XML: " + message, pos.line, pos.column);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  Pos here() const { return {line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }

  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    advance(s.size());
  }

  void skip_spaces() {
    while (!at_end() && is_space(peek())) advance();
  }

  void skip_bom() {
    if (starts_with("\xEF\xBB\xBF")) pos_ += 3;
  }

  // Consumes up to and including the terminator.
  std::string_view read_until(std::string_view terminator, const char* what) {
    const auto start = here();
    const auto begin = pos_;
    const auto end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) fail_at(std::string("unterminated ") + what, start);
    advance(end - begin + terminator.size());
    return text_.substr(begin, end - begin);
  }

  void skip_misc(bool allow_doctype) {
    for (;;) {
      skip_spaces();
      if (starts_with("<?")) {
        read_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        advance(4);
        read_until("-->", "comment");
      } else if (allow_doctype && starts_with("<!DOCTYPE")) {
        read_doctype();
      } else {
        return;
      }
    }
  }

  void read_doctype() {
    const auto start = here();
    advance(9);
    while (!at_end() && peek() != '[' && peek() != '>') {
      if (peek() == '"' || peek() == '\'') {
        const char q = peek();
        advance();
        while (!at_end() && peek() != q) advance();
        if (at_end()) fail_at("unterminated DOCTYPE", start);
      }
      advance();
    }
    if (at_end()) fail_at("unterminated DOCTYPE", start);
    if (peek() == '[') {
      advance();
      read_internal_subset();
    }
    skip_spaces();
    if (at_end() || peek() != '>') fail_at("unterminated DOCTYPE", start);
    advance();
  }

  void read_internal_subset() {
    for (;;) {
      skip_spaces();
      if (at_end()) fail("unterminated DOCTYPE internal subset");
      if (peek() == ']') {
        advance();
        return;
      }
      if (starts_with("<!--")) {
        advance(4);
        read_until("-->", "comment");
      } else if (starts_with("<!ENTITY")) {
        advance(8);
        skip_spaces();
        if (!at_end() && peek() == '%') fail("parameter entities are not supported");
        const std::string name = read_name();
        skip_spaces();
        if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted entity value");
        const std::string value = read_quoted(/*expand=*/true);
        skip_spaces();
        expect(">");
        entities_.emplace(name, value);
      } else if (starts_with("<!") || starts_with("<?")) {
        read_until(">", "markup declaration");
      } else {
        fail("unexpected character in DOCTYPE internal subset");
      }
    }
  }

  std::string read_name() {
    if (at_end() || !is_name_start(peek())) fail("expected a name");
    const auto begin = pos_;
    while (!at_end() && is_name_char(peek())) advance();
    return std::string(text_.substr(begin, pos_ - begin));
  }

  void read_reference(std::string& out) {
    const auto start = here();
    advance();  // '&'
    if (!at_end() && peek() == '#') {
      advance();
      int base = 10;
      if (!at_end() && peek() == 'x') {
        base = 16;
        advance();
      }
      const auto begin = pos_;
      while (!at_end() && peek() != ';') advance();
      if (at_end()) fail_at("unterminated character reference", start);
      const std::string digits(text_.substr(begin, pos_ - begin));
      advance();
      std::size_t used = 0;
      unsigned long cp = 0;
      try {
        cp = std::stoul(digits, &used, base);
      } catch (const std::exception&) {
        used = 0;
      }
      if (digits.empty() || used != digits.size() || cp > 0x10FFFF) {
        fail_at("bad character reference", start);
      }
      append_utf8(out, cp);
      return;
    }
    const std::string name = read_name();
    if (at_end() || peek() != ';') fail_at("unterminated entity reference", start);
    advance();
    if (name == "lt") out += '<';
    else if (name == "gt") out += '>';
    else if (name == "amp") out += '&';
    else if (name == "quot") out += '"';
    else if (name == "apos") out += '\'';
    else if (auto it = entities_.find(name); it != entities_.end()) out += it->second;
    else fail_at("undeclared entity '" + name + "'", start);
  }

  std::string read_quoted(bool expand) {
    const auto start = here();
    const char quote = peek();
    advance();
    std::string value;
    for (;;) {
      if (at_end()) fail_at("unterminated quoted value", start);
      const char c = peek();
      if (c == quote) {
        advance();
        return value;
      }
      if (c == '<' && expand) fail("'<' in attribute value");
      if (c == '&' && expand) {
        read_reference(value);
        continue;
      }
      value += c;
      advance();
    }
  }

  // Parses the open tag at the cursor; returns true when self-closing.
  bool read_start_tag(Element& el) {
    el.line = line_;
    el.column = column_;
    advance();  // '<'
    el.name = read_name();
    for (;;) {
      const bool had_space = !at_end() && is_space(peek());
      skip_spaces();
      if (at_end()) fail_at("unterminated start tag <" + el.name + ">", {el.line, el.column});
      if (peek() == '>') {
        advance();
        return false;
      }
      if (starts_with("/>")) {
        advance(2);
        return true;
      }
      if (!had_space) fail("expected whitespace between attributes");
      Attribute attr;
      attr.name = read_name();
      skip_spaces();
      expect("=");
      skip_spaces();
      if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
      attr.value = read_quoted(/*expand=*/true);
      if (el.attribute(attr.name) != nullptr) fail("duplicate attribute '" + attr.name + "'");
      el.attributes.push_back(std::move(attr));
    }
  }

  Element read_element_tree() {
    std::vector<Element> stack;
    Element first;
    if (read_start_tag(first)) return first;
    stack.push_back(std::move(first));

    while (!stack.empty()) {
      if (at_end()) {
        const auto& open = stack.back();
        fail_at("element <" + open.name + "> is never closed", {open.line, open.column});
      }
      if (starts_with("</")) {
        const auto pos = here();
        advance(2);
        const std::string name = read_name();
        skip_spaces();
        expect(">");
        if (name != stack.back().name) {
          fail_at("end tag </" + name + "> does not match <" + stack.back().name + "> opened at line " +
                      std::to_string(stack.back().line),
                  pos);
        }
        Element done = std::move(stack.back());
        stack.pop_back();
        if (stack.empty()) return done;
        stack.back().children.push_back(std::move(done));
      } else if (starts_with("<!--")) {
        advance(4);
        read_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        advance(9);
        stack.back().text += read_until("]]>", "CDATA section");
      } else if (starts_with("<?")) {
        read_until("?>", "processing instruction");
      } else if (starts_with("<!")) {
        fail("unexpected markup declaration inside an element");
      } else if (peek() == '<') {
        Element child;
        if (read_start_tag(child)) {
          stack.back().children.push_back(std::move(child));
        } else {
          stack.push_back(std::move(child));
        }
      } else if (peek() == '&') {
        read_reference(stack.back().text);
      } else {
        stack.back().text += peek();
        advance();
      }
    }
    fail("unreachable");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::map<std::string, std::string, std::less<>> entities_;
};

}  // namespace

Document parse(std::string_view text) { return Reader(text).run(); }

}  // namespace ontalign::xml
