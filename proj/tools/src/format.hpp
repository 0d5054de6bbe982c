#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace homspace::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& name);

// %.17g; non-finite values print as "nan", "inf" or "-inf".
std::string number(double v, int digits = 17);

// Doubles are written with 17 significant digits; NaN and infinities become null.
void write_json(std::ostream& os, const Json& j, int indent = 2);

// A record whose result holds a "rows" array is printed as a table of rows;
// everything else is printed as flattened key/value pairs.
void write_table(std::ostream& os, const Json& record);
void write_csv(std::ostream& os, const Json& record);

void write(std::ostream& os, const Json& record, Format f);

}  // namespace homspace::cli
