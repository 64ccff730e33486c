// Arithmetic in F_16 and its subfields.

use kasami::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::shared(4)?;
    println!("F_16 modulus {:#x}, alpha = {}", ctx.modulus(), ctx.alpha());
    let x = ctx.alpha_pow(7);
    let y = ctx.inv(x)?;
    println!("alpha^7 = {x}, inverse {y}, product {}", ctx.mul(x, y));

    let f4 = ctx.subfield(2)?;
    let f16 = ctx.subfield(4)?;
    let names: Vec<String> = f4.elements().iter().map(|e| e.to_string()).collect();
    println!("F_4 inside F_16: {}", names.join(" "));
    println!("Tr_16/4(alpha) = {}", ctx.trace(ctx.alpha(), &f4, &f16)?);

    let zeta = ctx.unity_root(5)?;
    let (d, l) = ctx.factor_dzeta(ctx.alpha_pow(11), &f4, zeta, 5)?;
    println!("alpha^11 = {d} * zeta^{l}");
    println!(
        "minimal polynomial of alpha over F_4: {}",
        ctx.minimal_polynomial(ctx.alpha(), &f4)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
