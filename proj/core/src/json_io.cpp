#include "dupforge/json_io.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

#include <json.hpp>

namespace dupforge {

void append_json_escaped(std::string& out, std::string_view text) {
  out.push_back('"');
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void append_json(std::string& out, const Value& value) {
  switch (value.kind()) {
    case ValueKind::Null:
      out += "null";
      break;
    case ValueKind::Boolean:
      out += value.as_bool() ? "true" : "false";
      break;
    case ValueKind::Number:
      out += value.as_number().to_string();
      break;
    case ValueKind::Text:
      append_json_escaped(out, value.as_text());
      break;
    case ValueKind::List: {
      out.push_back('[');
      const auto& list = value.as_list();
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) out.push_back(',');
        append_json(out, list[i]);
      }
      out.push_back(']');
      break;
    }
    case ValueKind::Document: {
      out.push_back('{');
      const auto& fields = value.as_document().fields();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.push_back(',');
        append_json_escaped(out, fields[i].first);
        out.push_back(':');
        append_json(out, fields[i].second);
      }
      out.push_back('}');
      break;
    }
  }
}

std::string to_json(const Value& value) {
  std::string out;
  append_json(out, value);
  return out;
}

namespace {

// Builds a Value tree from nlohmann's SAX events. number_float hands us the
// raw token, so decimals survive exactly.
class ValueSax {
 public:
  using json = nlohmann::json;
  using number_integer_t = json::number_integer_t;
  using number_unsigned_t = json::number_unsigned_t;
  using number_float_t = json::number_float_t;
  using string_t = json::string_t;
  using binary_t = json::binary_t;

  Value take() { return std::move(result_); }

  bool null() { return emit(Value::null()); }
  bool boolean(bool v) { return emit(Value(v)); }

  bool number_integer(number_integer_t v) { return emit(Value(Decimal::from_int(v))); }

  bool number_unsigned(number_unsigned_t v) {
    if (v <= static_cast<number_unsigned_t>(std::numeric_limits<std::int64_t>::max())) {
      return emit(Value(Decimal::from_int(static_cast<std::int64_t>(v))));
    }
    return emit(Value(std::to_string(v)));
  }

  bool number_float(number_float_t v, const string_t& raw) {
    if (auto d = Decimal::parse(raw)) return emit(Value(*d));
    // Token beyond decimal range: fall back to the shortest double form.
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    if (auto d = Decimal::parse(std::string_view(buf, end - buf))) return emit(Value(*d));
    return emit(Value(std::string(raw)));
  }

  bool string(string_t& v) { return emit(Value(std::move(v))); }

  bool binary(binary_t&) {
    raise("parse", "binary values are not supported");
  }

  bool start_object(std::size_t) {
    stack_.push_back(Frame{Value(Document{}), {}});
    return true;
  }

  bool key(string_t& k) {
    stack_.back().key = std::move(k);
    return true;
  }

  bool end_object() { return pop(); }

  bool start_array(std::size_t) {
    stack_.push_back(Frame{Value(Value::List{}), {}});
    return true;
  }

  bool end_array() { return pop(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::json::exception& ex) {
    raise("parse", "invalid JSON at byte " + std::to_string(position) + ": " + ex.what());
  }

 private:
  struct Frame {
    Value container;
    std::string key;
  };

  bool emit(Value v) {
    if (stack_.empty()) {
      result_ = std::move(v);
      return true;
    }
    Frame& top = stack_.back();
    if (top.container.kind() == ValueKind::List) {
      top.container.as_list().push_back(std::move(v));
    } else {
      top.container.as_document().set(top.key, std::move(v));
    }
    return true;
  }

  bool pop() {
    Value done = std::move(stack_.back().container);
    stack_.pop_back();
    return emit(std::move(done));
  }

  std::vector<Frame> stack_;
  Value result_;
};

}  // namespace

Value parse_json(std::string_view text) {
  ValueSax sax;
  if (!nlohmann::json::sax_parse(text, &sax)) {
    raise("parse", "invalid JSON value");
  }
  return sax.take();
}

}  // namespace dupforge
