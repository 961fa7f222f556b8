#include "classviz/chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "classviz/xml.hpp"

namespace classviz {

namespace {

char hex_digit(unsigned v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10);
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string Color::hex() const {
    std::string out = "#......";
    out[1] = hex_digit(r >> 4);
    out[2] = hex_digit(r & 0xF);
    out[3] = hex_digit(g >> 4);
    out[4] = hex_digit(g & 0xF);
    out[5] = hex_digit(b >> 4);
    out[6] = hex_digit(b & 0xF);
    return out;
}

std::optional<Color> Color::parse(std::string_view text) {
    if (text.size() != 7 || text[0] != '#') {
        return std::nullopt;
    }
    int v[6];
    for (int i = 0; i < 6; ++i) {
        v[i] = hex_value(text[i + 1]);
        if (v[i] < 0) {
            return std::nullopt;
        }
    }
    return Color{static_cast<std::uint8_t>(v[0] * 16 + v[1]),
                 static_cast<std::uint8_t>(v[2] * 16 + v[3]),
                 static_cast<std::uint8_t>(v[4] * 16 + v[5])};
}

std::string_view to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::Methods: return "methods";
        case MetricKind::Attributes: return "attributes";
        case MetricKind::Loc: return "loc";
    }
    return "methods";
}

namespace {

// round_half_up(max_height * value / ceiling) in exact integer arithmetic.
int scaled_height(long long value, long long ceiling, const ChartStyle& style) {
    if (value == 0) {
        return 0;
    }
    long long numer = 2 * static_cast<long long>(style.max_cone_height_px) *
                          value + ceiling;
    long long h = numer / (2 * ceiling);
    if (h < style.min_visible_height_px) {
        h = style.min_visible_height_px;
    }
    return static_cast<int>(h);
}

struct Layout {
    int chart_w = 0;
    int chart_h = 0;
    int pad = 12;
    int caption_h = 20;
    int label_h = 16;
    int ellipse_ry = 0;
    int baseline_y = 0;   // y of the cone base line
    int caption_y = 0;    // text baseline for the caption
};

Layout make_layout(const ChartStyle& style) {
    Layout l;
    l.ellipse_ry = std::max(4, style.cone_base_width_px / 6);
    l.chart_w = 2 * l.pad + 3 * style.cone_base_width_px + 2 * style.cone_gap_px;
    l.chart_h = 2 * l.pad + l.caption_h + l.label_h + style.max_cone_height_px +
                l.ellipse_ry;
    if (style.caption_position == CaptionPosition::Above) {
        l.baseline_y = l.pad + l.caption_h + l.label_h + style.max_cone_height_px;
        l.caption_y = l.pad + l.caption_h - 5;
    } else {
        l.baseline_y = l.pad + l.label_h + style.max_cone_height_px;
        l.caption_y = l.baseline_y + l.ellipse_ry + l.caption_h - 5;
    }
    return l;
}

void emit_chart_body(std::ostringstream& out, const ChartSpec& chart,
                     const ChartStyle& style, const Layout& l, int ox, int oy) {
    out << "  <g transform=\"translate(" << ox << "," << oy << ")\">\n";
    out << "    <text x=\"" << l.chart_w / 2 << "\" y=\"" << l.caption_y
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">"
        << xml::escape(chart.class_name) << "</text>\n";
    for (size_t i = 0; i < chart.cones.size(); ++i) {
        const ConeSpec& cone = chart.cones[i];
        int left = l.pad + static_cast<int>(i) *
                               (style.cone_base_width_px + style.cone_gap_px);
        int cx = left + style.cone_base_width_px / 2;
        int apex_y = l.baseline_y - cone.height_px;
        out << "    <ellipse cx=\"" << cx << "\" cy=\"" << l.baseline_y
            << "\" rx=\"" << style.cone_base_width_px / 2 << "\" ry=\""
            << l.ellipse_ry << "\" fill=\"" << cone.color.hex() << "\"/>\n";
        out << "    <polygon points=\"" << left << "," << l.baseline_y << " "
            << left + style.cone_base_width_px << "," << l.baseline_y << " "
            << cx << "," << apex_y << "\" fill=\"" << cone.color.hex()
            << "\"/>\n";
        out << "    <text x=\"" << cx << "\" y=\"" << apex_y - 5
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\">"
            << xml::escape(cone.label) << "</text>\n";
    }
    out << "  </g>\n";
}

std::string document(int width, int height, const std::string& body) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\""
        << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
        << " " << height << "\">\n";
    out << body;
    out << "</svg>\n";
    return std::move(out).str();
}

}  // namespace

ChartSpec build_chart(const ClassMetrics& metrics, const ChartStyle& style,
                      long long scale_ceiling) {
    const std::array<std::pair<MetricKind, long long>, 3> values = {{
        {MetricKind::Methods, metrics.nom},
        {MetricKind::Attributes, metrics.noa},
        {MetricKind::Loc, metrics.loc},
    }};
    if (scale_ceiling < 1) {
        throw std::logic_error("scale ceiling must be positive");
    }
    for (const auto& [kind, value] : values) {
        if (value > scale_ceiling) {
            throw std::logic_error(
                "scale ceiling " + std::to_string(scale_ceiling) +
                " is below " + std::string(to_string(kind)) + " value " +
                std::to_string(value) + " for " + metrics.class_ref);
        }
    }

    ChartSpec chart;
    chart.class_name = metrics.simple_name;
    chart.caption_position = style.caption_position;
    const std::array<Color, 3> colors = {style.methods_color,
                                         style.attributes_color,
                                         style.loc_color};
    for (size_t i = 0; i < 3; ++i) {
        ConeSpec& cone = chart.cones[i];
        cone.metric = values[i].first;
        cone.value = values[i].second;
        cone.height_px = scaled_height(cone.value, scale_ceiling, style);
        cone.color = colors[i];
        cone.label = std::to_string(cone.value);
    }
    return chart;
}

std::string render_svg(const ChartSpec& chart, const ChartStyle& style) {
    Layout l = make_layout(style);
    std::ostringstream body;
    emit_chart_body(body, chart, style, l, 0, 0);
    return document(l.chart_w, l.chart_h, std::move(body).str());
}

std::string render_grid(std::span<const ChartSpec> charts,
                        const ChartStyle& style, int columns) {
    if (columns < 1) {
        throw std::invalid_argument("columns must be positive");
    }
    Layout l = make_layout(style);
    if (charts.empty()) {
        return document(l.chart_w, l.pad * 2,
                        "  <desc>no charts selected</desc>\n");
    }
    int n = static_cast<int>(charts.size());
    int cols = std::min(columns, n);
    int rows = (n + columns - 1) / columns;
    std::ostringstream body;
    for (int i = 0; i < n; ++i) {
        int col = i % columns;
        int row = i / columns;
        emit_chart_body(body, charts[static_cast<size_t>(i)], style, l,
                        col * l.chart_w, row * l.chart_h);
    }
    return document(cols * l.chart_w, rows * l.chart_h, std::move(body).str());
}

}  // namespace classviz
