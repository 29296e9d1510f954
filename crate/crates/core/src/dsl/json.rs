//! JSON mirror of an [`Instance`]. Field names are stable: `elements`, `leq`,
//! `points`, `rel`, `values`.

use serde::{Deserialize, Serialize};

use super::Instance;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub name: String,
    pub elements: Vec<String>,
    /// Every pair `[x, y]` with `x <= y`, reflexive pairs included.
    pub leq: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<[String; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    pub name: String,
    pub points: Vec<String>,
    pub rel: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduatedJson {
    pub name: String,
    pub poset: String,
    /// Rows `[x, y, x*y]`.
    pub times: Vec<[String; 3]>,
    /// Rows `[x, y, x->y]`.
    pub arrow: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropJson {
    pub name: String,
    pub poset: String,
    pub frame: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub posets: Vec<PosetJson>,
    pub frames: Vec<FrameJson>,
    pub residuated: Vec<ResiduatedJson>,
    pub props: Vec<PropJson>,
    pub families: Vec<FamilyJson>,
}

pub fn to_json(inst: &Instance) -> InstanceJson {
    let posets = inst
        .posets
        .iter()
        .map(|n| {
            let p = &n.value;
            let l = |x: usize| p.label(x).to_string();
            PosetJson {
                name: n.name.clone(),
                elements: p.labels().to_vec(),
                leq: (0..p.len())
                    .flat_map(|x| p.up_set(x).iter().map(move |y| (x, y)))
                    .map(|(x, y)| [l(x), l(y)])
                    .collect(),
                involution: p
                    .involution()
                    .map(|m| m.iter().enumerate().map(|(x, &y)| [l(x), l(y)]).collect()),
            }
        })
        .collect();
    let frames = inst
        .frames
        .iter()
        .map(|n| {
            let f = &n.value;
            FrameJson {
                name: n.name.clone(),
                points: f.labels().to_vec(),
                rel: f
                    .pairs()
                    .into_iter()
                    .map(|(s, t)| [f.label(s).to_string(), f.label(t).to_string()])
                    .collect(),
            }
        })
        .collect();
    let residuated = inst
        .residuated
        .iter()
        .map(|n| {
            let t = &n.value.table;
            let p = t.base();
            let rows = |f: &dyn Fn(usize, usize) -> usize| -> Vec<[String; 3]> {
                (0..p.len())
                    .flat_map(|x| (0..p.len()).map(move |y| (x, y)))
                    .map(|(x, y)| [p.label(x).to_string(), p.label(y).to_string(), p.label(f(x, y)).to_string()])
                    .collect()
            };
            ResiduatedJson {
                name: n.name.clone(),
                poset: n.value.poset.clone(),
                times: rows(&|x, y| t.times(x, y)),
                arrow: rows(&|x, y| t.arrow(x, y)),
            }
        })
        .collect();
    let props = inst
        .props
        .iter()
        .map(|n| {
            let d = &n.value;
            let p = inst.poset(&d.poset).expect("props refer to declared posets");
            PropJson {
                name: n.name.clone(),
                poset: d.poset.clone(),
                frame: d.frame.clone(),
                values: d.values.iter().map(|&x| p.label(x).to_string()).collect(),
            }
        })
        .collect();
    let families = inst
        .families
        .iter()
        .map(|n| FamilyJson {
            name: n.name.clone(),
            members: n.value.members.clone(),
        })
        .collect();
    InstanceJson {
        posets,
        frames,
        residuated,
        props,
        families,
    }
}

pub fn to_json_string(inst: &Instance) -> String {
    serde_json::to_string_pretty(&to_json(inst)).expect("instance JSON")
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;
    use crate::fixtures::EXAMPLE_ONE_TEXT;

    #[test]
    fn example_one_json() {
        let inst = parse(EXAMPLE_ONE_TEXT).unwrap();
        let j = to_json(&inst);
        assert_eq!(j.posets[0].elements.len(), 9);
        assert!(j.posets[0].leq.contains(&["0".into(), "1".into()]));
        assert_eq!(j.frames[0].rel.len(), 6);
        assert_eq!(j.props[0].values, vec!["e", "g", "e"]);
        let text = to_json_string(&inst);
        let back: InstanceJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        for key in ["\"elements\"", "\"leq\"", "\"points\"", "\"rel\"", "\"values\""] {
            assert!(text.contains(key));
        }
    }
}
