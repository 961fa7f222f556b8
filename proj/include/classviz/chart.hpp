#ifndef CLASSVIZ_CHART_HPP
#define CLASSVIZ_CHART_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "classviz/metrics.hpp"

namespace classviz {

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    std::string hex() const;                // "#RRGGBB", uppercase
    static std::optional<Color> parse(std::string_view text);

    friend bool operator==(const Color&, const Color&) = default;
};

enum class CaptionPosition { Above, Below };
enum class ScaleMode { PerChart, Global };
enum class MetricKind { Methods, Attributes, Loc };

std::string_view to_string(MetricKind kind);

struct ChartStyle {
    Color methods_color{0x00, 0x80, 0x00};     // green
    Color attributes_color{0xFF, 0x00, 0x00};  // red
    Color loc_color{0x00, 0x00, 0xFF};         // blue
    int max_cone_height_px = 200;
    int cone_base_width_px = 60;
    int cone_gap_px = 24;
    CaptionPosition caption_position = CaptionPosition::Above;
    ScaleMode scale_mode = ScaleMode::PerChart;
    // Applied only to nonzero values so small counts stay visible.
    int min_visible_height_px = 2;
};

struct ConeSpec {
    MetricKind metric = MetricKind::Methods;
    long long value = 0;
    int height_px = 0;
    Color color;
    std::string label;  // exact decimal value; heights scale, labels never do

    friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

// Resolved geometry of one chart: always three cones, fixed order
// methods, attributes, loc.
struct ChartSpec {
    std::string class_name;
    std::array<ConeSpec, 3> cones;
    CaptionPosition caption_position = CaptionPosition::Above;

    friend bool operator==(const ChartSpec&, const ChartSpec&) = default;
};

// Maps the three metric values onto cone heights:
//   value 0            -> height 0
//   value v > 0        -> max(min_visible, round_half_up(max_height * v / ceiling))
// `scale_ceiling` must be >= every value and >= 1; in per-chart scaling it is
// exactly the chart's own maximum (or 1 when all values are zero).
// Throws std::logic_error when the ceiling contract is violated.
ChartSpec build_chart(const ClassMetrics& metrics, const ChartStyle& style,
                      long long scale_ceiling);

// One chart as a standalone SVG document: per cone a filled triangle over a
// half-height ellipse in the same color, the value label above each apex,
// and the class-name caption above or below the cones. Byte-deterministic.
std::string render_svg(const ChartSpec& chart, const ChartStyle& style);

// Charts laid out left-to-right, top-to-bottom into one SVG. An empty list
// yields a valid document with a note element.
std::string render_grid(std::span<const ChartSpec> charts,
                        const ChartStyle& style, int columns);

}  // namespace classviz

#endif
