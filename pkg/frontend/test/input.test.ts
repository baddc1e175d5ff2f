import { describe, expect, it } from 'vitest';

import { InputDriver } from '../src/input.js';
import { ViewModel } from '../src/viewmodel.js';

function harness(connected = true) {
  const sent: Array<Record<string, unknown>> = [];
  const vm = new ViewModel();
  const driver = new InputDriver((text) => {
    if (!connected) return false;
    sent.push(JSON.parse(text));
    return true;
  }, vm);
  return { sent, vm, driver };
}

describe('InputDriver', () => {
  it('maps a key hold to one paddle press and one release', () => {
    const { sent, driver } = harness();
    driver.keyDown('ArrowRight');
    driver.keyDown('ArrowRight', true);   // browser auto-repeat
    driver.keyDown('ArrowRight', true);
    driver.keyUp('ArrowRight');
    expect(sent).toHaveLength(2);
    expect(sent[0]).toMatchObject({ type: 'limb_input', pattern: 'paddle',
                                    action: 'press' });
    expect(sent[1]).toMatchObject({ pattern: 'paddle', action: 'release' });
  });

  it('maps the jump key to a flick press', () => {
    const { sent, driver } = harness();
    driver.keyDown('Space');
    driver.keyUp('Space');
    expect(sent).toHaveLength(1);
    expect(sent[0]).toMatchObject({ pattern: 'flick', action: 'press' });
  });

  it('keeps paddling while any bound key is still held', () => {
    const { sent, driver } = harness();
    driver.keyDown('ArrowRight');
    driver.keyDown('KeyD');
    driver.keyUp('ArrowRight');
    expect(sent.filter((c) => c.action === 'release')).toHaveLength(0);
    driver.keyUp('KeyD');
    expect(sent.filter((c) => c.action === 'release')).toHaveLength(1);
  });

  it('tracks held pattern state for the HUD', () => {
    const { vm, driver } = harness();
    driver.keyDown('KeyD');
    expect(vm.heldPatterns.has('paddle')).toBe(true);
    driver.keyUp('KeyD');
    expect(vm.heldPatterns.has('paddle')).toBe(false);
  });

  it('drops commands with an indicator when disconnected', () => {
    const { sent, vm, driver } = harness(false);
    driver.keyDown('ArrowRight');
    driver.keyDown('Space');
    expect(sent).toHaveLength(0);
    expect(vm.droppedCommands).toBe(2);
    expect(vm.heldPatterns.size).toBe(0);   // nothing pretends to be held
  });

  it('releases everything when the window blurs', () => {
    const { sent, driver } = harness();
    driver.keyDown('ArrowRight');
    driver.releaseAll();
    expect(sent.at(-1)).toMatchObject({ pattern: 'paddle', action: 'release' });
  });
});
