macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }
    };
}

example!(automorphisms);
example!(complete_regularity);
example!(concatenation);
example!(coset_graph);
example!(cyclic_form);
example!(field_arithmetic);
example!(gfc_files);
example!(mds_code);
example!(union_of_cosets);

#[test]
fn examples_run() {
    automorphisms::run().unwrap();
    complete_regularity::run().unwrap();
    concatenation::run().unwrap();
    coset_graph::run().unwrap();
    cyclic_form::run().unwrap();
    field_arithmetic::run().unwrap();
    gfc_files::run().unwrap();
    mds_code::run().unwrap();
    union_of_cosets::run().unwrap();
}
