//! Bundled example diagrams.

use crate::diagram::{parse_diagram, CurveDiagram};

/// Whether the theorem's hypotheses are expected to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Verified,
    Fails,
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub expect: Expect,
}

impl CorpusEntry {
    pub fn diagram(&self) -> CurveDiagram {
        parse_diagram(self.text).expect("bundled diagrams parse")
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry { name: "nodal_cubic", text: include_str!("../corpus/nodal_cubic.wd"), expect: Expect::Verified },
    CorpusEntry { name: "parabola_lines", text: include_str!("../corpus/parabola_lines.wd"), expect: Expect::Verified },
    CorpusEntry { name: "smooth_cubic", text: include_str!("../corpus/smooth_cubic.wd"), expect: Expect::Fails },
    CorpusEntry { name: "deltoid", text: include_str!("../corpus/deltoid.wd"), expect: Expect::Fails },
    CorpusEntry { name: "cuspidal_cubic", text: include_str!("../corpus/cuspidal_cubic.wd"), expect: Expect::Fails },
    CorpusEntry { name: "cardioid", text: include_str!("../corpus/cardioid.wd"), expect: Expect::Fails },
    CorpusEntry { name: "concentric", text: include_str!("../corpus/concentric.wd"), expect: Expect::Fails },
    CorpusEntry { name: "hypo_quotient_k2", text: include_str!("../corpus/hypo_quotient_k2.wd"), expect: Expect::Verified },
    CorpusEntry { name: "hypo_quotient_k3", text: include_str!("../corpus/hypo_quotient_k3.wd"), expect: Expect::Verified },
    CorpusEntry { name: "hypo_quotient_k4", text: include_str!("../corpus/hypo_quotient_k4.wd"), expect: Expect::Verified },
];

pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

pub fn corpus_diagram(name: &str) -> Option<CurveDiagram> {
    corpus_entry(name).map(CorpusEntry::diagram)
}
