//! Tree–braid–tree diagrams.
//!
//! The numerator forest is drawn on top with its leaves pointing down, the
//! braid hangs from those leaves with its first letter at the top, and the
//! denominator forest is drawn upside down underneath. For `σ_i` the strand
//! running from position `i` at the top to `i + 1` below passes over; for
//! `σ_i⁻¹` the other one does.

use std::fmt::Write as _;

use bvgroup::braid::Gen;
use bvgroup::forest::{Address, Forest};
use bvgroup::fraction::Fraction;

const UNIT: f64 = 40.0;
const LEVEL: f64 = 26.0;
const CROSS: f64 = 34.0;
const MARGIN: f64 = 30.0;
const GAP: f64 = 0.22;

/// One drawn node: its position counted in strands and in levels above
/// (or below) the leaves, and its children.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeLayout {
    pub address: Address,
    pub tree: usize,
    pub x: f64,
    pub height: usize,
    pub children: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TreeLayout {
    pub nodes: Vec<NodeLayout>,
    pub depth: usize,
}

impl TreeLayout {
    /// Lays out the first `strands` leaves of `forest`.
    fn of(forest: &Forest, strands: usize) -> TreeLayout {
        let mut nodes = Vec::new();
        let mut depth = 0;
        let mut leaf = 0;
        let mut t = 0;
        while leaf < strands {
            let tree = forest.tree(t);
            let leaves = tree.leaves();
            let base = leaf;
            let start = nodes.len();
            for a in tree.nodes() {
                let under: Vec<usize> = leaves
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| a.is_prefix_of(l))
                    .map(|(k, _)| base + k)
                    .collect();
                let x = (under[0] + under[under.len() - 1]) as f64 / 2.0;
                let height = tree.subtree(a).nodes().iter().map(|n| n.len()).max().unwrap_or(0);
                depth = depth.max(height + a.len());
                nodes.push(NodeLayout {
                    address: a.clone(),
                    tree: t,
                    x,
                    height,
                    children: None,
                });
            }
            for k in start..nodes.len() {
                let a = nodes[k].address.clone();
                let find = |c: Address| (start..nodes.len()).find(|&j| nodes[j].address == c);
                if let (Some(l), Some(r)) = (find(a.child(false)), find(a.child(true))) {
                    nodes[k].children = Some((l, r));
                }
            }
            leaf += leaves.len();
            t += 1;
        }
        TreeLayout { nodes, depth }
    }

    pub fn roots(&self) -> impl Iterator<Item = &NodeLayout> {
        self.nodes.iter().filter(|n| n.address.is_empty())
    }
}

/// Everything needed to draw an element.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramSpec {
    pub strands: usize,
    pub numerator: TreeLayout,
    pub crossings: Vec<Gen>,
    pub denominator: TreeLayout,
    pub caption: String,
}

impl DiagramSpec {
    /// The diagram of the triple as stored. With `raw` unset the braid is
    /// freely reduced first.
    pub fn new(x: &Fraction, raw: bool) -> DiagramSpec {
        let braid = if raw { x.braid().clone() } else { x.braid().free_reduce() };
        let (f, g) = (x.numerator(), x.denominator());
        // Enough strands to show every caret and every crossing, and the
        // same number of leaves at both ends.
        let strands = f
            .leaf_span()
            .max(g.leaf_span())
            .max(braid.width())
            .max(1);
        DiagramSpec {
            strands,
            numerator: TreeLayout::of(f, strands),
            crossings: braid.letters().to_vec(),
            denominator: TreeLayout::of(g, strands),
            caption: x.text(),
        }
    }

    fn strand_x(&self, k: f64) -> f64 {
        MARGIN + k * UNIT
    }

    pub fn to_svg(&self) -> String {
        let top = self.numerator.depth as f64;
        let leaves_top = MARGIN + top * LEVEL;
        let band_top = leaves_top + LEVEL / 2.0;
        let band_bottom = band_top + self.crossings.len() as f64 * CROSS;
        let leaves_bottom = band_bottom + LEVEL / 2.0;
        let height = leaves_bottom + self.denominator.depth as f64 * LEVEL + MARGIN + 20.0;
        let width = 2.0 * MARGIN + (self.strands.saturating_sub(1)) as f64 * UNIT;

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.1} {height:.1}" width="{width:.0}" height="{height:.0}">"#
        );
        let _ = writeln!(out, r#"  <title>{}</title>"#, escape(&self.caption));
        let _ = writeln!(out, r#"  <g stroke="black" stroke-width="2" fill="none" stroke-linecap="round">"#);

        // Trees.
        let trees = [
            (&self.numerator, leaves_top, -1.0, "numerator"),
            (&self.denominator, leaves_bottom, 1.0, "denominator"),
        ];
        for (layout, base, dir, class) in trees {
            let _ = writeln!(out, r#"    <g class="{class}">"#);
            for n in &layout.nodes {
                if let Some((l, r)) = n.children {
                    for c in [&layout.nodes[l], &layout.nodes[r]] {
                        let _ = writeln!(
                            out,
                            r#"      <line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"#,
                            self.strand_x(n.x),
                            base + dir * n.height as f64 * LEVEL,
                            self.strand_x(c.x),
                            base + dir * c.height as f64 * LEVEL
                        );
                    }
                }
            }
            for r in layout.roots() {
                let _ = writeln!(
                    out,
                    r#"      <circle class="root" cx="{:.1}" cy="{:.1}" r="3" fill="black"/>"#,
                    self.strand_x(r.x),
                    base + dir * r.height as f64 * LEVEL
                );
            }
            let _ = writeln!(out, "    </g>");
        }

        // Straight strand pieces joining the trees to the braid.
        let _ = writeln!(out, r#"    <g class="strands">"#);
        for k in 0..self.strands {
            let x = self.strand_x(k as f64);
            let _ = writeln!(out, r#"      <line x1="{x:.1}" y1="{leaves_top:.1}" x2="{x:.1}" y2="{band_top:.1}"/>"#);
            let _ = writeln!(out, r#"      <line x1="{x:.1}" y1="{band_bottom:.1}" x2="{x:.1}" y2="{leaves_bottom:.1}"/>"#);
        }
        let _ = writeln!(out, "    </g>");

        // The braid, one crossing per level.
        for (j, g) in self.crossings.iter().enumerate() {
            let y0 = band_top + j as f64 * CROSS;
            let y1 = y0 + CROSS;
            let (xi, xj) = (self.strand_x(g.index as f64), self.strand_x(g.index as f64 + 1.0));
            let sign = if g.inverse { "-" } else { "+" };
            let _ = writeln!(
                out,
                r#"    <g class="crossing" data-index="{}" data-sign="{sign}">"#,
                g.index
            );
            for k in 0..self.strands {
                if k != g.index && k != g.index + 1 {
                    let x = self.strand_x(k as f64);
                    let _ = writeln!(out, r#"      <line x1="{x:.1}" y1="{y0:.1}" x2="{x:.1}" y2="{y1:.1}"/>"#);
                }
            }
            // Over strand whole, under strand broken around the middle.
            let (over, under) = if g.inverse {
                ((xj, xi), (xi, xj))
            } else {
                ((xi, xj), (xj, xi))
            };
            let _ = writeln!(
                out,
                r#"      <line class="over" x1="{:.1}" y1="{y0:.1}" x2="{:.1}" y2="{y1:.1}"/>"#,
                over.0, over.1
            );
            let lerp = |t: f64| (under.0 + (under.1 - under.0) * t, y0 + (y1 - y0) * t);
            let (a, b) = (lerp(0.5 - GAP), lerp(0.5 + GAP));
            let _ = writeln!(
                out,
                r#"      <path class="under" d="M {:.1} {y0:.1} L {:.1} {:.1} M {:.1} {:.1} L {:.1} {y1:.1}"/>"#,
                under.0, a.0, a.1, b.0, b.1, under.1
            );
            let _ = writeln!(out, "    </g>");
        }
        let _ = writeln!(out, "  </g>");
        let _ = writeln!(
            out,
            r#"  <text x="{MARGIN:.1}" y="{:.1}" font-family="monospace" font-size="12">{}</text>"#,
            height - 10.0,
            escape(&self.caption)
        );
        out.push_str("</svg>\n");
        out
    }

    /// A plain-text sketch. Over and under are not shown.
    pub fn to_ascii(&self) -> String {
        let labels = |layout: &TreeLayout| -> Vec<String> {
            let mut leaves: Vec<&NodeLayout> = layout.nodes.iter().filter(|n| n.children.is_none()).collect();
            leaves.sort_by(|a, b| a.x.total_cmp(&b.x));
            leaves
                .iter()
                .map(|n| {
                    if n.address.is_empty() {
                        n.tree.to_string()
                    } else {
                        format!("{}.{}", n.tree, n.address)
                    }
                })
                .collect()
        };
        let top = labels(&self.numerator);
        let bottom = labels(&self.denominator);
        let width = top.iter().chain(&bottom).map(|s| s.len()).max().unwrap_or(1).max(3) + 2;
        let col = |k: usize| k * width + width / 2;
        let line_len = self.strands * width;
        let row = |marks: &[(usize, char)]| {
            let mut chars = vec![' '; line_len];
            for &(c, m) in marks {
                chars[c] = m;
            }
            chars.into_iter().collect::<String>().trim_end().to_string()
        };
        let label_row = |labels: &[String]| {
            let mut s = String::new();
            for l in labels {
                let _ = write!(s, "{l:^width$}");
            }
            s.trim_end().to_string()
        };
        let bars = |skip: Option<usize>| -> Vec<(usize, char)> {
            (0..self.strands)
                .filter(|&k| Some(k) != skip && skip.map_or(true, |i| k != i + 1))
                .map(|k| (col(k), '|'))
                .collect()
        };

        let mut lines = vec![
            "(ascii sketch: over/under crossings not shown)".to_string(),
            format!("numerator leaves"),
            label_row(&top),
            row(&bars(None)),
        ];
        for g in &self.crossings {
            let (a, b) = (col(g.index), col(g.index + 1));
            let mid = (a + b) / 2;
            let mut r1 = bars(Some(g.index));
            r1.extend([(a + 1, '\\'), (b - 1, '/')]);
            let mut r2 = bars(Some(g.index));
            r2.push((mid, 'X'));
            let mut r3 = bars(Some(g.index));
            r3.extend([(a + 1, '/'), (b - 1, '\\')]);
            let tag = format!("   {g}");
            lines.push(row(&r1));
            lines.push(row(&r2) + &tag);
            lines.push(row(&r3));
        }
        lines.push(row(&bars(None)));
        lines.push(label_row(&bottom));
        lines.push("denominator leaves".to_string());
        lines.push(format!("element: {}", self.caption));
        lines.join("\n") + "\n"
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
