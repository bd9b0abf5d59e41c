//! Static bar chart of a distribution, written as plain SVG.

use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 48.0;

/// `bars` are `(label, height)` pairs in display order.
pub fn bar_chart(title: &str, x_label: &str, bars: &[(u32, f64)]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let top = bars.iter().map(|b| b.1).fold(0.0, f64::max);
    let scale = if top > 0.0 { plot_h / top } else { 0.0 };
    let slot = plot_w / bars.len().max(1) as f64;
    let base = HEIGHT - MARGIN;

    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        WIDTH - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{base}" stroke="black"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{base}" text-anchor="end" dy="0.3em">0</text>"#,
        MARGIN - 4.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{MARGIN}" text-anchor="end" dy="0.3em">{top:.4}</text>"#,
        MARGIN - 4.0
    );

    // label roughly every 40px
    let every = ((40.0 / slot).ceil() as usize).max(1);
    for (i, &(label, value)) in bars.iter().enumerate() {
        let h = value * scale;
        let x = MARGIN + i as f64 * slot;
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{h:.2}" fill="#4a72b0"><title>{label}: {value}</title></rect>"##,
            x + 0.1 * slot,
            base - h,
            0.8 * slot
        );
        if i % every == 0 {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{}" text-anchor="middle">{label}</text>"#,
                x + slot / 2.0,
                base + 14.0
            );
        }
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 10.0,
        escape(x_label)
    );
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_rect_per_bar() {
        let svg = bar_chart("t", "x", &[(1, 0.5), (2, 0.25), (3, 0.0)]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<rect x=").count(), 3);
    }
}
