//! Tree literals: `path:N`, `star:N`, `pruefer:a,b,c`, `file:PATH`.

use anyhow::{bail, Context, Result};
use tworow::tree::pruefer_decode;
use tworow::Tree;

pub fn parse_tree(literal: &str) -> Result<Tree> {
    let Some((kind, rest)) = literal.split_once(':') else {
        bail!("tree literal `{literal}` must look like path:N, star:N, pruefer:a,b,c or file:PATH");
    };
    let size = || rest.trim().parse::<usize>().with_context(|| format!("bad vertex count in `{literal}`"));
    let tree = match kind {
        "path" => Tree::path(size()?)?,
        "star" => Tree::star(size()?)?,
        "pruefer" => {
            let seq = if rest.trim().is_empty() {
                Vec::new()
            } else {
                rest.split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .with_context(|| format!("bad Prüfer label in `{literal}`"))?
            };
            pruefer_decode(seq.len() + 2, &seq)?
        }
        "file" => {
            let text = std::fs::read_to_string(rest).with_context(|| format!("cannot read tree file {rest}"))?;
            Tree::parse_edge_list(&text)?
        }
        _ => bail!("unknown tree kind `{kind}` (expected path, star, pruefer or file)"),
    };
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tworow::tree::pruefer_encode;

    #[test]
    fn literals() {
        assert_eq!(parse_tree("path:4").unwrap().to_string(), "n=4:1-2,2-3,3-4");
        assert_eq!(parse_tree("star:4").unwrap().degrees()[1], 3);
        assert_eq!(pruefer_encode(&parse_tree("pruefer:2,3").unwrap()).unwrap(), vec![2, 3]);
        assert_eq!(parse_tree("pruefer:2,3").unwrap().degrees(), Tree::path(4).unwrap().degrees());
        assert_eq!(parse_tree("pruefer:").unwrap().n(), 2);
        for bad in ["path", "path:x", "cycle:4", "pruefer:9,9", "file:/nonexistent/t.txt", "star:0"] {
            assert!(parse_tree(bad).is_err(), "{bad}");
        }
    }
}
