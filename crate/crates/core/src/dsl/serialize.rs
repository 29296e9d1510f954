use std::fmt::Write;

use super::Instance;
use crate::frame::TimeFrame;
use crate::poset::Poset;

/// Canonical text: posets, frames, residuated tables, props, families, each
/// kind in declaration order. `parse(serialize(x)) == x`.
pub fn serialize(inst: &Instance) -> String {
    let mut out = String::new();
    for n in &inst.posets {
        poset(&mut out, &n.name, &n.value);
    }
    for n in &inst.frames {
        frame(&mut out, &n.name, &n.value);
    }
    for n in &inst.residuated {
        let t = &n.value.table;
        let p = t.base();
        let _ = writeln!(out, "residuated {} over {} {{", n.name, n.value.poset);
        for (kw, f) in [("times", 0), ("arrow", 1)] {
            for x in 0..p.len() {
                for y in 0..p.len() {
                    let r = if f == 0 { t.times(x, y) } else { t.arrow(x, y) };
                    let _ = writeln!(out, "  {kw}: {} {} {};", p.label(x), p.label(y), p.label(r));
                }
            }
        }
        out.push_str("}\n\n");
    }
    for n in &inst.props {
        let d = &n.value;
        let p = inst.poset(&d.poset).expect("props refer to declared posets");
        let vals: Vec<&str> = d.values.iter().map(|&x| p.label(x)).collect();
        let _ = writeln!(out, "prop {} over {},{} = [{}];", n.name, d.poset, d.frame, vals.join(", "));
    }
    if !inst.props.is_empty() && !inst.families.is_empty() {
        out.push('\n');
    }
    for n in &inst.families {
        let _ = writeln!(out, "family {} = {{ {} }};", n.name, n.value.members.join(", "));
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    out
}

fn poset(out: &mut String, name: &str, p: &Poset) {
    let covers: Vec<String> = p
        .covers()
        .into_iter()
        .map(|(a, b)| format!("{}<{}", p.label(a), p.label(b)))
        .collect();
    let inv: Vec<String> = p
        .involution()
        .map(|m| {
            (0..p.len())
                .filter(|&x| x <= m[x])
                .map(|x| format!("{}:{}", p.label(x), p.label(m[x])))
                .collect()
        })
        .unwrap_or_default();
    let elements = p.labels().join(" ");
    if covers.is_empty() && inv.is_empty() {
        let _ = writeln!(out, "poset {name} {{ elements: {elements}; }}\n");
        return;
    }
    let _ = writeln!(out, "poset {name} {{");
    let _ = writeln!(out, "  elements: {elements};");
    if !covers.is_empty() {
        let _ = writeln!(out, "  covers: {};", covers.join(", "));
    }
    if !inv.is_empty() {
        let _ = writeln!(out, "  involution: {};", inv.join(", "));
    }
    out.push_str("}\n\n");
}

fn frame(out: &mut String, name: &str, f: &TimeFrame) {
    let rel: Vec<String> = f
        .pairs()
        .into_iter()
        .map(|(s, t)| format!("{}->{}", f.label(s), f.label(t)))
        .collect();
    let _ = writeln!(out, "frame {name} {{");
    let _ = writeln!(out, "  points: {};", f.labels().join(" "));
    let _ = writeln!(out, "  rel: {};", rel.join(", "));
    out.push_str("}\n\n");
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;
    use crate::fixtures::EXAMPLE_ONE_TEXT;
    use crate::residuated::ResiduatedPoset;

    #[test]
    fn round_trip_example_one() {
        let inst = parse(EXAMPLE_ONE_TEXT).unwrap();
        let text = serialize(&inst);
        let back = parse(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(serialize(&back), text);
        assert!(text.contains("involution: 0:1, a:g, b:f, c:e, d:d;"));
    }

    #[test]
    fn singleton_poset_is_one_line() {
        let mut inst = Instance::new();
        inst.add_poset("S", Poset::chain(1));
        assert_eq!(serialize(&inst), "poset S { elements: 0; }\n");
        assert_eq!(parse(&serialize(&inst)).unwrap(), inst);
    }

    #[test]
    fn residuated_round_trip() {
        let mut inst = Instance::new();
        let g = ResiduatedPoset::godel_chain(3);
        inst.add_poset("G", g.base().clone()).add_residuated("R", "G", g);
        let back = parse(&serialize(&inst)).unwrap();
        assert_eq!(back, inst);
    }
}
