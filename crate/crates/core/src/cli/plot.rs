//! Lattice plots of generator bidegrees and regions, as SVG or ASCII.

use std::fmt::Write;

use crate::algebra::Bidegree;
use crate::staircase::Region;

/// Side of one lattice cell in SVG output, in pixels.
pub const CELL: i64 = 24;

/// What to draw on the `[0, A] × [0, B]` lattice.
#[derive(Clone, Debug, Default)]
pub struct Plot {
    pub corner: Bidegree,
    /// Bidegrees of the input generators (green).
    pub input: Vec<Bidegree>,
    /// Bidegrees of monomial generators, e.g. of bigin (black).
    pub monomial: Vec<Bidegree>,
    /// Shaded region.
    pub region: Option<Region>,
    pub region_label: String,
}

impl Plot {
    /// Smallest corner showing every point and minimal element, plus a
    /// margin of two cells.
    pub fn fit(&mut self, min_corner: Bidegree) {
        let mut c = min_corner;
        let pts = self.input.iter().chain(&self.monomial).copied();
        let mins = self.region.iter().flat_map(|r| r.minimal_elements().to_vec());
        for p in pts.chain(mins) {
            c = c.join(&(p + Bidegree::new(2, 2)));
        }
        self.corner = c;
    }

    fn shaded(&self, d: Bidegree) -> bool {
        self.region.as_ref().is_some_and(|r| r.contains(d))
    }

    /// Character grid, `b` increasing upwards.
    pub fn ascii(&self) -> String {
        let mut s = String::new();
        for b in (0..=self.corner.b).rev() {
            let _ = write!(s, "{b:>3} |");
            for a in 0..=self.corner.a {
                let d = Bidegree::new(a, b);
                let ch = match (self.input.contains(&d), self.monomial.contains(&d)) {
                    (true, true) => '@',
                    (true, false) => 'g',
                    (false, true) => 'o',
                    _ if self.shaded(d) => '#',
                    _ => '.',
                };
                s.push(' ');
                s.push(ch);
            }
            s.push('\n');
        }
        let _ = write!(s, "    +");
        for _ in 0..=self.corner.a {
            s.push_str("--");
        }
        s.push('\n');
        let _ = write!(s, "     ");
        for a in 0..=self.corner.a {
            let _ = write!(s, "{:>2}", a % 10);
        }
        let _ = writeln!(s, "  a");
        let _ = writeln!(
            s,
            "legend: g input generator, o monomial generator, @ both, # {}",
            if self.region_label.is_empty() { "region" } else { &self.region_label }
        );
        s
    }

    /// SVG with the origin at the bottom left.
    pub fn svg(&self) -> String {
        let margin = 40;
        let (na, nb) = (self.corner.a + 1, self.corner.b + 1);
        let (w, h) = (na * CELL + 2 * margin, nb * CELL + 2 * margin);
        let x = |a: i64| margin + a * CELL;
        let y = |b: i64| margin + (nb - 1 - b) * CELL;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="11">"#
        );
        let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
        for a in 0..na {
            for b in 0..nb {
                if self.shaded(Bidegree::new(a, b)) {
                    let _ = writeln!(
                        s,
                        r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="#f4b6b6"/>"##,
                        x(a),
                        y(b)
                    );
                }
            }
        }
        for a in 0..=na {
            let _ = writeln!(
                s,
                r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#cccccc"/>"##,
                x(a),
                margin,
                margin + nb * CELL
            );
        }
        for b in 0..=nb {
            let _ = writeln!(
                s,
                r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#cccccc"/>"##,
                margin + b * CELL,
                margin,
                margin + na * CELL
            );
        }
        let r = CELL / 4;
        for d in &self.input {
            let _ = writeln!(
                s,
                r##"<circle cx="{}" cy="{}" r="{}" fill="#1a9c3a"/>"##,
                x(d.a) + CELL / 2 - r / 2,
                y(d.b) + CELL / 2,
                r
            );
        }
        for d in &self.monomial {
            let _ = writeln!(
                s,
                r##"<circle cx="{}" cy="{}" r="{}" fill="black"/>"##,
                x(d.a) + CELL / 2 + r / 2,
                y(d.b) + CELL / 2,
                r
            );
        }
        for a in 0..na {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" text-anchor="middle">{a}</text>"#,
                x(a) + CELL / 2,
                margin + nb * CELL + 14
            );
        }
        for b in 0..nb {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" text-anchor="end">{b}</text>"#,
                margin - 4,
                y(b) + CELL / 2 + 4
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">a</text>"#,
            margin + na * CELL / 2,
            h - 6
        );
        let _ = writeln!(
            s,
            r#"<text x="12" y="{}" text-anchor="middle">b</text>"#,
            margin + nb * CELL / 2
        );
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::Ambient;

    #[test]
    fn ascii_marks() {
        let p = Plot {
            corner: Bidegree::new(3, 1),
            input: vec![Bidegree::new(1, 1)],
            monomial: vec![Bidegree::new(2, 0), Bidegree::new(1, 1)],
            region: Some(Region::from_generators(Ambient::PositiveX, [Bidegree::new(3, 0)])),
            region_label: String::new(),
        };
        let s = p.ascii();
        let rows: Vec<&str> = s.lines().collect();
        assert_eq!(rows[0], "  1 | . @ . #");
        assert_eq!(rows[1], "  0 | . . o #");
    }

    #[test]
    fn svg_is_well_formed() {
        let p = Plot {
            corner: Bidegree::new(2, 2),
            ..Default::default()
        };
        let s = p.svg();
        assert!(s.starts_with("<svg"));
        assert!(s.trim_end().ends_with("</svg>"));
        assert!(s.contains(r#"width="152""#));
    }
}
