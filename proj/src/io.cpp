#include "twinbeam/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace twinbeam {

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x",
                              static_cast<unsigned>(ch));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    return format_double(v);
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 9);
    return std::string(buf.data(), res.ptr);
}

void JsonWriter::comma() {
    if (!first_in_scope_.empty()) {
        if (first_in_scope_.back()) {
            first_in_scope_.back() = false;
        } else {
            out_ += ',';
        }
    }
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
    comma();
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\":[";
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
    comma();
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\":{";
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
    comma();
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\":";
    out_ += json_number(value);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key,
                              const std::string& value) {
    comma();
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\":\"";
    out_ += escape_json(value);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
    comma();
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\":";
    out_ += value ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, long long value) {
    comma();
    out_ += '"';
    out_ += escape_json(key);
    out_ += "\":";
    out_ += std::to_string(value);
    return *this;
}

JsonWriter& JsonWriter::element(double value) {
    comma();
    out_ += json_number(value);
    return *this;
}

JsonWriter& JsonWriter::element_array_of_doubles(
    const std::vector<double>& values) {
    comma();
    out_ += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out_ += ',';
        }
        out_ += json_number(values[i]);
    }
    out_ += ']';
    return *this;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += cells[i];
    }
    out += '\n';
    return out;
}

} // namespace twinbeam
