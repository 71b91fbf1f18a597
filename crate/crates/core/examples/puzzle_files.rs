use lightsout::document::{Family, PuzzleDocument, Template, TemplateParams};
use lightsout::solver::{apply_clicks, solve_lights_out, ClickSet, Puzzle};

// Round trip through the JSON puzzle document: build from a template,
// scramble, save, load, solve.
fn main() -> lightsout::Result<()> {
    let template = Template {
        family: Family::Torus,
        params: TemplateParams {
            dims: Some(vec![3, 4]),
            ..Default::default()
        },
    };
    let start = Puzzle::all_off(template.build()?);
    let scrambled = apply_clicks(&start, &ClickSet("100001000010".parse()?))?;

    let path = std::env::temp_dir().join(format!("lightsout-{}.json", std::process::id()));
    PuzzleDocument::from_puzzle(&scrambled).write(&path)?;
    println!(
        "wrote {} ({} bytes)",
        path.display(),
        std::fs::metadata(&path)?.len()
    );

    let loaded = PuzzleDocument::read(&path)?.to_puzzle()?;
    std::fs::remove_file(&path)?;
    assert_eq!(loaded, scrambled);

    let fix = solve_lights_out(&loaded)?.expect("reachable from all off");
    let solved = apply_clicks(&loaded, &fix)?;
    println!(
        "state {} -> press {} -> {}",
        loaded.state(),
        fix,
        solved.state()
    );
    Ok(())
}
