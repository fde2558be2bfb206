#ifndef RMSPACE_JSON_WRITER_HPP
#define RMSPACE_JSON_WRITER_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace rmspace {

/// Minimal streaming JSON writer with insertion-ordered keys and floating
/// values printed with 17 significant digits, so identical runs produce
/// byte-identical reports.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return sep().put('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return sep().put('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const std::string& k) {
    sep();
    write_string(k);
    out_ += ':';
    fresh_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    sep();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
    return *this;
  }
  JsonWriter& value(std::int64_t v) { return sep().raw(std::to_string(v)); }
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v) { return sep().raw(v ? "true" : "false"); }
  JsonWriter& value(const std::string& v) {
    sep();
    write_string(v);
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }

  JsonWriter& kv(const std::string& k, double v) { return key(k).value(v); }
  JsonWriter& kv(const std::string& k, std::int64_t v) { return key(k).value(v); }
  JsonWriter& kv(const std::string& k, int v) { return key(k).value(v); }
  JsonWriter& kv(const std::string& k, bool v) { return key(k).value(v); }
  JsonWriter& kv(const std::string& k, const std::string& v) { return key(k).value(v); }
  JsonWriter& kv(const std::string& k, const char* v) { return key(k).value(v); }

  const std::string& str() const { return out_; }

 private:
  JsonWriter& raw(const std::string& s) {
    out_ += s;
    return *this;
  }
  JsonWriter& put(char c) {
    out_ += c;
    fresh_ = true;
    return *this;
  }
  JsonWriter& sep() {
    if (!fresh_) out_ += ',';
    fresh_ = false;
    return *this;
  }
  JsonWriter& close(char c) {
    out_ += c;
    fresh_ = false;
    return *this;
  }
  void write_string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  bool fresh_ = true;
};

}  // namespace rmspace

#endif
