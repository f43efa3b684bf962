#pragma once

#include <string>
#include <vector>

namespace twinbeam {

/// Render a double with 9 significant digits via std::to_chars, so output
/// bytes do not depend on locale or printf implementation details.
std::string format_double(double v);

/// Minimal order-preserving JSON writer for the CLI's report shapes.
/// Numbers render through format_double; NaN becomes null.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key);
    JsonWriter& begin_object(const std::string& key);
    JsonWriter& end_array();
    JsonWriter& field(const std::string& key, double value);
    JsonWriter& field(const std::string& key, const std::string& value);
    JsonWriter& field(const std::string& key, bool value);
    JsonWriter& field(const std::string& key, long long value);
    JsonWriter& element(double value);
    JsonWriter& element_array_of_doubles(const std::vector<double>& values);
    std::string str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> first_in_scope_;
};

/// One CSV row of preformatted cells.
std::string csv_row(const std::vector<std::string>& cells);

} // namespace twinbeam
