macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(fock_states, "fock_states.rs");
example!(reduced_states, "reduced_states.rs");
example!(entanglement_measures, "entanglement_measures.rs");
example!(chsh_horodecki, "chsh_horodecki.rs");
example!(exclusivity, "exclusivity.rs");
example!(acceleration, "acceleration.rs");
example!(figure_sweep, "figure_sweep.rs");

#[test]
fn fock_states_runs() {
    fock_states::run_example().expect("fock states example");
}

#[test]
fn reduced_states_runs() {
    reduced_states::run_example().expect("reduced states example");
}

#[test]
fn entanglement_measures_runs() {
    entanglement_measures::run_example().expect("entanglement measures example");
}

#[test]
fn chsh_horodecki_runs() {
    chsh_horodecki::run_example().expect("chsh example");
}

#[test]
fn exclusivity_runs() {
    exclusivity::run_example().expect("exclusivity example");
}

#[test]
fn acceleration_runs() {
    acceleration::run_example().expect("acceleration example");
}

#[test]
fn figure_sweep_runs() {
    figure_sweep::run_example().expect("figure sweep example");
}
